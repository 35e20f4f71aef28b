#pragma once
#include <vector>

#include "triality/loop.hpp"

namespace triality {

// A loop whose table has been checked to be associative. Unit is index 0.
class FiniteGroup {
 public:
  static FiniteGroup from_loop(FiniteLoop q, par::Exec exec = par::Exec::OpenMP);
  static FiniteGroup from_table(int n, std::vector<int> table0, par::Exec exec = par::Exec::OpenMP);

  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup direct_power(const FiniteGroup& g, int k);

  int order() const { return q_.order(); }
  int mul(int a, int b) const { return q_.mul(a, b); }
  int inv(int a) const { return q_.inv(a); }
  int unit() const { return 0; }
  // g⁻¹xg
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
  int power(int a, int e) const { return q_.power(a, e); }
  bool is_automorphism(const Perm& p) const;
  // conjugation x ↦ g⁻¹xg as a permutation of the element set
  Perm conj_perm(int g) const;
  Perm inversion_perm() const;  // valid automorphism only when abelian
  const FiniteLoop& loop() const { return q_; }

 private:
  explicit FiniteGroup(FiniteLoop q) : q_(std::move(q)) {}
  FiniteLoop q_;
};

}  // namespace triality
