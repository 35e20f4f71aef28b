#pragma once
#include <map>
#include <string>
#include <vector>

#include "triality/autotopy.hpp"
#include "triality/gtriality.hpp"
#include "triality/loop.hpp"
#include "triality/rational.hpp"
#include "triality/subspace.hpp"

namespace triality {

// Group algebra F[G] of a group with triality. Basis elements are group-like
// (Δb = b⊗b, εb = 1, Sb = b⁻¹), so the whole Hopf structure rides on the
// multiplication table plus the two basis automorphisms.
struct HopfCarrier {
  FiniteLoop basis;
  Perm rho, sigma;
};

// Loop algebra F[Q] of a Moufang loop: same group-like basis, product only
// Moufang. `verified` names the Hopf-level identities checked at construction.
struct MoufangHopfCarrier {
  FiniteLoop basis;
  bool associative = false;
  std::vector<std::string> verified;
};

// sparse element Σ c_b·b
using HopfElement = std::map<int, Rat>;

HopfElement hopf_mul(const FiniteLoop& basis, const HopfElement& a, const HopfElement& b);
HopfElement hopf_apply(const Perm& p, const HopfElement& u);
HopfElement hopf_antipode(const FiniteLoop& basis, const HopfElement& u);
Rat hopf_counit(const HopfElement& u);

HopfCarrier group_algebra(const TrialityGroup& tg);
// verifies inverses, the Moufang identities in Hopf form and the antipode
// conditions on the basis; throws CheckError when q is not Moufang
MoufangHopfCarrier loop_algebra(const FiniteLoop& q, par::Exec exec = par::Exec::OpenMP);

// P(u) = Σ σ(u₁)·S(u₂); on a basis element this is σ(b)·b⁻¹
int p_basis(const HopfCarrier& h, int b);
HopfElement p_map(const HopfCarrier& h, const HopfElement& u);

struct HopfTriality {
  bool pass = false;
  std::int64_t checked = 0;
  nlohmann::json witness;  // {"element", "order"} of the least failure
};
// Σ P(u₁)·ρ(P(u₂))·ρ²(P(u₃)) = ε(u)·1 over the basis; linear extension makes
// the basis scan exhaustive
HopfTriality check_hopf_triality(const HopfCarrier& h, par::Exec exec = par::Exec::OpenMP);

// Σ ρ^i(u₁)·ρ^j(u₂) = Σ ρ^j(u₁)·ρ^i(u₂)
bool check_commutation(const HopfCarrier& h, const HopfElement& u, int i, int j);

struct GeneratorVariants {
  bool pass = false;  // both variant verdicts agree with the base one
  bool base = false;
  bool rho2_rhosigma = false;  // generators (ρ², ρσ)
  bool rho2sigma = false;      // generators (ρ, ρ²σ)
};
// the triality verdict must not depend on the chosen S₃ generators
GeneratorVariants check_generator_independence(const HopfCarrier& h,
                                               par::Exec exec = par::Exec::OpenMP);

struct MHSubalgebra {
  std::vector<int> carrier;  // parent basis indices, unit first then ascending
  FiniteLoop star;           // u*v = ρ²(S(u))·v·ρ(S(u)) on carrier slots
  Subspace p_image;          // span of {P(b)} in basis coordinates
  std::vector<std::string> verified;
};
// MH(H) = {P(x)}. Both product formulas are computed and compared entrywise,
// closure, the Moufang-Hopf identities and the antipode conditions are all
// verified; violations throw CheckError.
MHSubalgebra mh_subalgebra(const HopfCarrier& h);

// star table against the Moufang loop M(G) under the matching u ↦ u⁻¹
bool mh_matches_moufang(const HopfCarrier& h, const MHSubalgebra& mh, const MLoopResult& ml);

// For F[Q] the operators P_m = R_{S(m)}L_{S(m)}, L_m, R_m satisfy five
// families of identities (unit, counit triple, sandwiches, twists); checked
// as permutation identities over all basis pairs.
LoopReport check_mult_alg_identities(const FiniteLoop& q, par::Exec exec = par::Exec::OpenMP);

// Atp(Q) packaged as a group with triality; `triples` maps basis index to
// autotopy, identity first then ascending.
struct AtpGroup {
  TrialityGroup tg;
  std::vector<AutotopyTriple> triples;
  std::map<AutotopyTriple, int> index;
  int index_of(const AutotopyTriple& t) const;
};
AtpGroup atp_as_triality_group(const FiniteLoop& q, par::Exec exec = par::Exec::OpenMP);

// The universal object on symbols {P_m, L_m, R_m : m ∈ F[Q]} maps into a Hopf
// algebra with triality by φ̄(P_m) = φ(m), φ̄(L_m) = ρ(φ(m)), φ̄(R_m) = ρ²(φ(m)).
// Checks every defining relation on the images, σ-equivariance, antipode
// compatibility, and that φ is an injective multiplicative map into MH(target).
LoopReport verify_doro_target(const MoufangHopfCarrier& u, const HopfCarrier& target,
                              const std::vector<int>& phi, par::Exec exec = par::Exec::OpenMP);

}  // namespace triality
