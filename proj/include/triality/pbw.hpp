#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "triality/structure_constants.hpp"

namespace triality {

// Exponent vector over the Lie basis, always of length dim; the monomial is
// the product of its factors taken in increasing index order.
using PBWMono = std::vector<std::uint8_t>;
// canonical monomial -> coefficient; zero coefficients never stored
using PBWElement = std::map<PBWMono, Rat>;
using TensorElement = std::map<std::pair<PBWMono, PBWMono>, Rat>;
using Tensor3Element = std::map<std::array<PBWMono, 3>, Rat>;

int mono_degree(const PBWMono& m);
int element_degree(const PBWElement& u);  // 0 for the zero element

void add_to(PBWElement& acc, const PBWMono& m, const Rat& c);
PBWElement add(const PBWElement& a, const PBWElement& b);
PBWElement sub(const PBWElement& a, const PBWElement& b);
PBWElement scale(const PBWElement& a, const Rat& c);

// U(g) in PBW normal form over an anticommutative bracket. Jacobi is the
// caller's contract (every bracket here comes from a validated Lie algebra);
// without it the straightening below would not be well defined.
class PBW {
 public:
  explicit PBW(AlgebraSC bracket);  // throws CheckError unless anticommutative

  int dim() const { return br_.dim; }
  const AlgebraSC& bracket() const { return br_; }

  PBWElement one() const;
  PBWElement gen(int i) const;
  PBWElement from_coords(const QVec& v) const;  // degree-1 element

  PBWElement mul(const PBWElement& a, const PBWElement& b) const;
  PBWElement mul_mono(const PBWMono& a, const PBWMono& b) const;
  TensorElement coproduct(const PBWElement& u) const;
  Tensor3Element coproduct3(const PBWElement& u) const;  // (Δ⊗id)Δ, expanded per factor
  PBWElement antipode(const PBWElement& u) const;
  Rat counit(const PBWElement& u) const;

  PBWElement circle(const PBWElement& a, const PBWElement& x) const;  // ax + xa

 private:
  AlgebraSC br_;
  mutable std::map<std::pair<PBWMono, int>, PBWElement> right_gen_;  // straightened m·xⱼ
  mutable std::map<PBWMono, PBWElement> antipode_;
  mutable std::mutex lock_;

  PBWElement mul_mono_gen(const PBWMono& m, int j) const;
  PBWElement mul_elem_gen(const PBWElement& u, int j) const;
};

// Multiplicative extension of a bracket automorphism to U(g), acting on each
// monomial factor and re-straightening; per-monomial images cached. Keeps a
// pointer into the PBW it was built from.
class LiftedMap {
 public:
  LiftedMap(const PBW& u, QMatrix m);  // throws unless m preserves the bracket
  PBWElement operator()(const PBWElement& x) const;
  const QMatrix& matrix() const { return m_; }

 private:
  const PBW* u_;
  QMatrix m_;
  mutable std::map<PBWMono, PBWElement> cache_;
  mutable std::mutex lock_;
};
LiftedMap lift_auto(const PBW& u, QMatrix m);

// every monomial of degree ≤ maxdeg, graded lexicographic, deterministic
std::vector<PBWMono> monomials_up_to(int dim, int maxdeg);

// coordinates of degree-≤ maxdeg elements over monomials_up_to
struct MonoIndex {
  std::vector<PBWMono> monos;
  std::map<PBWMono, int> pos;

  MonoIndex(int dim, int maxdeg);
  int size() const { return static_cast<int>(monos.size()); }
  QVec coords(const PBWElement& u) const;  // throws CheckError on out-of-slice monomial
};

}  // namespace triality
