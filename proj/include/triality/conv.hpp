#pragma once
#include <array>
#include <optional>
#include <vector>

#include "triality/loop.hpp"
#include "triality/qmatrix.hpp"

namespace triality {

// §-machinery for maps out of a group-like coalgebra with point set
// {0..points-1}: every structure is carried pointwise.
//
// A coalgebra morphism into the loop algebra FQ picks a group-like image per
// point; convolution of morphisms is the pointwise loop product.
using Morphism = std::vector<int>;

// Operator map X → End(FQ), one matrix per point. Matrix column g holds the
// image of basis element g; operators act on the right of elements, so
// "apply A then B" is B.at[x] * A.at[x] in column convention.
struct ConvOperator {
  std::vector<QMatrix> at;
  bool operator==(const ConvOperator& o) const { return at == o.at; }
};

ConvOperator conv_identity(int points, int dim);
ConvOperator conv_mul(const ConvOperator& a, const ConvOperator& b);  // apply a, then b

// Operator map X → Bij(Q): the shape every member of G(C,FQ) takes once the
// counit and coproduct conditions pin each basis image to a basis element.
struct PermOp {
  std::vector<Perm> at;
  bool operator==(const PermOp& o) const { return at == o.at; }
  bool operator!=(const PermOp& o) const { return !(at == o.at); }
};

PermOp pm_identity(int points, int n);
PermOp pm_mul(const PermOp& a, const PermOp& b);  // apply a, then b
PermOp pm_inv(const PermOp& a);
PermOp pm_s(const FiniteLoop& q, const PermOp& a);  // A^S: c ↦ S·A_c·S
ConvOperator perms_to_conv(const PermOp& a, int dim);

// invertibility + counit + coproduct conditions, pointwise on the basis;
// extracts the permutation form on success
struct GMember {
  bool pass = false;
  nlohmann::json witness;  // {"point","basis","condition"}
  PermOp perms;
};
GMember g_membership(const FiniteLoop& q, const ConvOperator& a);

// L_A: c ↦ L_{1·A_c}, R_A, U_A and A^S; construction verifies the lifted
// inverses (L_A)⁻¹ = (L⁻¹)_A and friends
struct LiftedOps {
  PermOp l, r, u, s;
};
LiftedOps lifted_ops(const FiniteLoop& q, const PermOp& a);

struct ConvTriple {
  PermOp a, b, c;
  bool operator==(const ConvTriple& o) const { return a == o.a && b == o.b && c == o.c; }
  ConvTriple operator*(const ConvTriple& o) const {
    return {pm_mul(a, o.a), pm_mul(b, o.b), pm_mul(c, o.c)};
  }
  ConvTriple inverse() const { return {pm_inv(a), pm_inv(b), pm_inv(c)}; }
};
ConvTriple conv_rho(const FiniteLoop& q, const ConvTriple& t);    // (B^S, C, A^S)
ConvTriple conv_sigma(const FiniteLoop& q, const ConvTriple& t);  // (C, B^S, A)

// least (point, x, y) with (xy)A_c ≠ (xB_c)(yC_c), if any
std::optional<std::array<int, 3>> atpc_witness(const FiniteLoop& q, const ConvTriple& t,
                                               par::Exec exec = par::Exec::OpenMP);
bool atpc_membership(const FiniteLoop& q, const ConvTriple& t, par::Exec exec = par::Exec::OpenMP);

// Mor(C,FQ) under convolution as a Cayley table on Q^points, morphism f
// encoded as Σ f(x)·|Q|^x; verified Moufang
FiniteLoop convolution_loop(int points, const FiniteLoop& q, par::Exec exec = par::Exec::OpenMP);

// identity laws and associativity of the operator convolution on seeded
// random matrix operators
LoopReport conv_algebra_report(int points, const FiniteLoop& q, int samples, std::uint64_t seed);

// canonical triples and their seeded products: membership, ρ/σ images, S₃
// relations, the three convolution triality equalities, the middle-Hopf and
// decomposition lemmas, the product formula on {L_B}, and the exhaustive
// morphism bijection θ ↦ L_θ
LoopReport atpc_triality_checks(int points, const FiniteLoop& q, int samples, std::uint64_t seed,
                                par::Exec exec = par::Exec::OpenMP);

}  // namespace triality
