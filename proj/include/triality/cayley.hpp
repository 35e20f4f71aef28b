#pragma once
#include "triality/structure_constants.hpp"

namespace triality {

// Cayley-Dickson doubling three steps up from the field. Basis order is
// 1, e₁, e₂, e₃=e₁e₂, e₄, e₅=e₁e₄, e₆=e₂e₄, e₇=e₃e₄; the doubling step uses
// (a,b)(c,d) = (ac + μ d̄b, da + bc̄), conj(a,b) = (ā, −b).
struct CayleyAlgebra {
  Rat alpha, beta, gamma;
  AlgebraSC alg;      // 8-dim product table
  QMatrix conj;       // conjugation x ↦ x̄
  QMatrix norm_gram;  // bilinear n(x,y); n(x) = n(x,x)
  Subspace trace0;    // O₀ = {x : x + x̄ = 0} = span{e₁..e₇}

  QVec conjugate(const QVec& x) const { return conj.apply(x); }
  Rat norm(const QVec& x) const;
  Rat norm_bi(const QVec& x, const QVec& y) const;
  QVec trace(const QVec& x) const;  // x + x̄, a multiple of 1

  // the traceless part with commutator bracket, in coordinates e₁..e₇
  AlgebraSC o0_commutator() const;
  // embed O₀ coordinates into the 8-dim algebra and back
  QVec o0_embed(const QVec& v7) const;
  QVec o0_project(const QVec& v8) const;  // throws if the 1-component is nonzero
};

// throws on any zero parameter; all construction invariants (unital,
// alternative, norm multiplicative on basis pairs) are checked here
CayleyAlgebra build_cayley(const Rat& alpha, const Rat& beta, const Rat& gamma);

// a nonzero vector of norm zero, when the form is isotropic
std::optional<QVec> find_isotropic(const CayleyAlgebra& o);

}  // namespace triality
