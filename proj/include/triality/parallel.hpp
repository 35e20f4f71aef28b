#pragma once
#include <cstdint>
#include <optional>
#include <vector>

namespace triality::par {

enum class Exec { Serial, OpenMP };

// Lowest index in [0, n) failing the predicate, or nullopt. The OpenMP path
// reduces to the minimum witness, so the result is identical to the serial
// scan regardless of scheduling.
template <class Pred>
std::optional<std::int64_t> first_violation(std::int64_t n, Exec exec, Pred&& ok) {
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i)
      if (!ok(i)) return i;
    return std::nullopt;
  }
  std::int64_t best = n;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t i = 0; i < n; ++i) {
    if (i < best && !ok(i)) best = i;
  }
  if (best < n) return best;
  return std::nullopt;
}

// Evaluates fn on every index, keeping the hits in index order.
template <class Fn>
auto collect_hits(std::int64_t n, Exec exec, Fn&& fn)
    -> std::vector<typename decltype(fn(std::int64_t{}))::value_type> {
  using T = typename decltype(fn(std::int64_t{}))::value_type;
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(n));
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i) slots[i] = fn(i);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) slots[i] = fn(i);
  }
  std::vector<T> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

// Deterministic seeded generator (splitmix64); independent of platform RNG
// library details so sampled checks reproduce everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound) by rejection
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace triality::par
