#include "triality/loop_gen.hpp"

namespace triality {

FiniteLoop chein_loop(const FiniteGroup& g) {
  const int n = g.order(), m = 2 * n;
  std::vector<int> tab(static_cast<std::size_t>(m) * m);
  auto put = [&](int x, int y, int v) { tab[static_cast<std::size_t>(x) * m + y] = v; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      put(a, b, g.mul(a, b));
      put(a, n + b, n + g.mul(b, a));
      put(n + a, b, n + g.mul(a, g.inv(b)));
      put(n + a, n + b, g.mul(g.inv(b), a));
    }
  return FiniteLoop::from_table(m, std::move(tab));
}

FiniteLoop octonion_unit_loop(const CayleyAlgebra& o) {
  std::vector<int> elt(64), sgn(64);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const QVec& p = o.alg.mul_basis(i, j);
      int k = -1;
      for (int t = 0; t < 8; ++t)
        if (p[static_cast<std::size_t>(t)] != 0) {
          if (k >= 0) throw CheckError("unit-loop-not-closed", {{"i", i + 1}, {"j", j + 1}});
          k = t;
        }
      const Rat& c = p[static_cast<std::size_t>(k)];
      if (c != 1 && c != -1) throw CheckError("unit-loop-not-closed", {{"i", i + 1}, {"j", j + 1}, {"coeff", rat_str(c)}});
      elt[static_cast<std::size_t>(i) * 8 + j] = k;
      sgn[static_cast<std::size_t>(i) * 8 + j] = c == 1 ? 0 : 1;
    }
  std::vector<int> tab(16 * 16);
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) {
      int i = x & 7, j = y & 7;
      int s = ((x >> 3) + (y >> 3) + sgn[static_cast<std::size_t>(i) * 8 + j]) & 1;
      tab[static_cast<std::size_t>(x) * 16 + y] = elt[static_cast<std::size_t>(i) * 8 + j] + 8 * s;
    }
  return FiniteLoop::from_table(16, std::move(tab));
}

FiniteLoop octonion_unit_loop() { return octonion_unit_loop(build_cayley(-1, -1, -1)); }

namespace {

bool extend(std::vector<int>& t, int pos, FiniteLoop* out) {
  constexpr int n = 5;
  if (pos == n * n) {
    FiniteLoop q = FiniteLoop::from_table(n, t);
    if (!check_moufang(q, par::Exec::Serial).pass()) {
      *out = std::move(q);
      return true;
    }
    return false;
  }
  int r = pos / n, c = pos % n;
  if (r == 0 || c == 0) return extend(t, pos + 1, out);
  for (int v = 0; v < n; ++v) {
    bool clash = false;
    for (int k = 0; k < c && !clash; ++k) clash = t[static_cast<std::size_t>(r) * n + k] == v;
    for (int k = 0; k < r && !clash; ++k) clash = t[static_cast<std::size_t>(k) * n + c] == v;
    if (clash) continue;
    t[static_cast<std::size_t>(pos)] = v;
    if (extend(t, pos + 1, out)) return true;
  }
  t[static_cast<std::size_t>(pos)] = 0;
  return false;
}

}  // namespace

FiniteLoop non_moufang_5() {
  constexpr int n = 5;
  std::vector<int> t(n * n, 0);
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i)] = i;
    t[static_cast<std::size_t>(i) * n] = i;
  }
  FiniteLoop out = FiniteLoop::from_table(1, {0});
  if (!extend(t, 0, &out)) throw CheckError("no-non-moufang-square", {{"order", n}});
  return out;
}

}  // namespace triality
