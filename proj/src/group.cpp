#include "triality/group.hpp"

namespace triality {

namespace {
constexpr int kGroupCap = 4096;
}

FiniteGroup FiniteGroup::from_loop(FiniteLoop q, par::Exec exec) {
  if (q.order() > kGroupCap) throw CheckError("group-order-cap", {{"order", q.order()}, {"cap", kGroupCap}});
  if (auto w = q.associativity_witness(exec))
    throw CheckError("not-associative", {{"a", (*w)[0] + 1}, {"b", (*w)[1] + 1}, {"c", (*w)[2] + 1}});
  if (!q.has_two_sided_inverses()) throw CheckError("no-inverses", {});
  return FiniteGroup(std::move(q));
}

FiniteGroup FiniteGroup::from_table(int n, std::vector<int> table0, par::Exec exec) {
  return from_loop(FiniteLoop::from_table(n, std::move(table0)), exec);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return from_table(n, std::move(t), par::Exec::Serial);
}

FiniteGroup FiniteGroup::symmetric3() {
  // all permutations of three points, identity first, ordered by image vector
  std::vector<Perm> elems;
  std::vector<int> img{0, 1, 2};
  do
    elems.push_back(Perm(img));
  while (std::next_permutation(img.begin(), img.end()));
  std::vector<int> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Perm p = elems[a] * elems[b];
      int idx = static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
      t[static_cast<std::size_t>(a) * 6 + b] = idx;
    }
  return from_table(6, std::move(t), par::Exec::Serial);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  if (n > kGroupCap) throw CheckError("group-order-cap", {{"order", n}, {"cap", kGroupCap}});
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int p = a.mul(x / nb, y / nb), q = b.mul(x % nb, y % nb);
      t[static_cast<std::size_t>(x) * n + y] = p * nb + q;
    }
  return from_table(n, std::move(t), par::Exec::OpenMP);
}

FiniteGroup FiniteGroup::direct_power(const FiniteGroup& g, int k) {
  if (k < 1) throw CheckError("bad-power", {{"k", k}});
  FiniteGroup r = g;
  for (int i = 1; i < k; ++i) r = direct_product(r, g);
  return r;
}

bool FiniteGroup::is_automorphism(const Perm& p) const {
  const int n = order();
  if (p.size() != n || p(0) != 0) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p(mul(a, b)) != mul(p(a), p(b))) return false;
  return true;
}

Perm FiniteGroup::conj_perm(int g) const {
  const int n = order();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = conj(x, g);
  return Perm(img);
}

Perm FiniteGroup::inversion_perm() const {
  const int n = order();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = inv(x);
  return Perm(img);
}

}  // namespace triality
