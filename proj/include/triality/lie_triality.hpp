#pragma once
#include "triality/cayley.hpp"

namespace triality {

QMatrix qmatrix_from_json(const nlohmann::json& j);
nlohmann::json qmatrix_to_json(const QMatrix& m);

// Lie algebra with a pair of bracket automorphisms generating an S₃ action:
// σ² = ρ³ = id and σρ = ρ²σ as matrices.
struct LieWithTriality {
  AlgebraSC bracket;
  QMatrix rho, sigma;

  // validates anticommutativity, Jacobi, the automorphism property and the
  // S₃ relations; throws CheckError
  static LieWithTriality make(AlgebraSC bracket, QMatrix rho, QMatrix sigma);
  static LieWithTriality from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// the operator a ↦ a − σ(a) + ρ(a) − ρσ(a) + ρ²(a) − ρ²σ(a)
QMatrix triality_defect(const QMatrix& rho, const QMatrix& sigma);
// least basis index with a nonzero defect column, if any; works on raw
// matrix pairs so that non-automorphism fixtures can be probed too
std::optional<int> lie_triality_witness(const QMatrix& rho, const QMatrix& sigma);
bool check_lie_triality(const QMatrix& rho, const QMatrix& sigma);
bool check_lie_triality(const LieWithTriality& g);
// the defect written as Σ_{τ∈S₃} sig(τ)·τ, expanding the six group words
// independently; always agrees with triality_defect
bool alternating_sum_matches(const QMatrix& rho, const QMatrix& sigma);
// E(1;ρ) ⊆ E(1;σ); equivalent to the defect vanishing for a genuine
// automorphism pair
bool eigen_one_criterion(const QMatrix& rho, const QMatrix& sigma);
bool eigen_one_criterion(const LieWithTriality& g);

// o(O,n) presented on the ordered basis Der(O), L_{e₁..e₇}, R_{e₁..e₇};
// construction verifies the three parts are independent and that together
// they span the full skew space {d : n(dx,y) + n(x,dy) = 0}
struct OrthoLie {
  Subspace skew;               // flat 8×8 matrices, ambient dimension 64
  std::vector<QMatrix> der;    // kernel of the derivation conditions
  std::vector<QMatrix> basis;  // der, then L parts, then R parts
  BasisSolver coords;          // coordinates of a flat matrix in `basis`
  AlgebraSC lie;               // commutator bracket in those coordinates

  int dim() const { return static_cast<int>(basis.size()); }
  int lpart(int i) const { return static_cast<int>(der.size()) + i; }
  int rpart(int i) const { return static_cast<int>(der.size()) + 7 + i; }
  QMatrix from_coords(const QVec& v) const;  // Σ vᵢ·basisᵢ as an 8×8 matrix
};
OrthoLie ortho_lie(const CayleyAlgebra& o);

// the ternary-derivation companions ζ: d₁ ↦ d₂ and η: d₁ ↦ d₃ of
// d₁(xy) = d₂(x)y + x d₃(y), and the triality pair ρ = ηζ, σ = ζηζ;
// everything is verified at construction: the companion identity on all 64
// basis pairs, the automorphism property, the S₃ relations, and agreement
// of ρ, σ with the block description d ↦ d, L_a ↦ R_a, R_a ↦ −(L_a + R_a)
// resp. d ↦ d, L_a ↦ −R_a, R_a ↦ −L_a
struct TrialityAutosO {
  QMatrix zeta, eta, rho, sigma;  // on OrthoLie coordinates
};
TrialityAutosO triality_autos_o(const CayleyAlgebra& o, const OrthoLie& ol);

// operator realization of the Lie algebra attached to the Malcev algebra O₀:
// λ_a = L_a and ρ_a = R_a acting on the Cayley algebra, with the bracket
// closure of these generators equal to o(O,n)
struct LieOfMalcev {
  CayleyAlgebra o;
  LieWithTriality lie;  // bracket and triality pair in OrthoLie coordinates
  OrthoLie ortho;
  TrialityAutosO autos;
  AlgebraSC malcev;  // O₀ with the commutator bracket, dim 7
  Subspace lie_minus;

  QMatrix lambda_op(int i) const;  // λ_{eᵢ₊₁} as an 8×8 matrix, i = 0..6
  QMatrix rho_op(int i) const;
  QMatrix t_op(int i) const;          // T = λ + ρ
  QMatrix ad_op(int i) const;         // ad = λ − ρ
  QMatrix d_op(int i, int j) const;   // D = ad_{[a,b]} − 3[λ_a, ρ_b]
  QVec t_coords(int i) const;         // coordinates of T in the OrthoLie basis
};
LieOfMalcev lie_of_malcev(const CayleyAlgebra& o);

// 2-dim nonabelian Lie algebra [e₁,e₂] = e₁
AlgebraSC two_dim_nonabelian();
// s ⊕ s ⊕ s with ρ a cyclic shift of the summands and σ a swap of the
// first two; the alternating sum telescopes to zero for any base s
LieWithTriality wreath_lie(const AlgebraSC& base);

}  // namespace triality
