#pragma once
#include <optional>
#include <utility>

#include "triality/lie_triality.hpp"
#include "triality/loop.hpp"
#include "triality/pbw.hpp"

namespace triality {

// P(x) = Σ σ(x₁)S(x₂) inside U(g), with σ the lifted automorphism
PBWElement p_of(const PBW& u, const LiftedMap& sigma, const PBWElement& x);

// u*v = Σ ρ²(S(u₁)) v ρ(S(u₂)); defined on all of U(g), closed on MH values
PBWElement star(const PBW& u, const LiftedMap& rho, const LiftedMap& rho2, const PBWElement& a,
                const PBWElement& b);
// the symmetric formula Σ ρ(S(v₁)) u ρ²(S(v₂)) of the same product
PBWElement star_second(const PBW& u, const LiftedMap& rho, const LiftedMap& rho2, const PBWElement& a,
                       const PBWElement& b);

// circle words a_w∘(⋯∘(a₂∘a₁)) over a list of degree-1 elements, empty word
// included; ordered_only keeps index tuples non-decreasing outward
std::vector<PBWElement> circle_words(const PBW& u, const std::vector<PBWElement>& gens, int maxlen,
                                     bool ordered_only);

struct SliceCheck {
  bool pass = false;
  std::int64_t checked = 0;
  std::optional<PBWMono> witness;
  double seconds = 0;
};

// Σ P(u₁)ρ(P(u₂))ρ²(P(u₃)) = ε(u)1 on every monomial of degree ≤ d
SliceCheck check_ug_triality(const LieWithTriality& g, int degree, par::Exec exec = par::Exec::OpenMP);

struct ActionCheck {
  bool pass = false;
  std::int64_t checked = 0;
  std::optional<std::pair<PBWMono, int>> witness;  // (monomial x, basis index a)
  double seconds = 0;
};

// ε(x)a − P(x)·σ(a) + P(x)·ρ(a) − ρ²σ(P(x))·ρσ(a) + ρ²σ(P(x))·ρ²(a) − ε(x)ρ²(σ(a)) = 0
// with · the adjoint action Σ x₁ a S(x₂), over monomials x of degree ≤ d and basis a
ActionCheck check_action_identity(const LieWithTriality& g, int degree, par::Exec exec = par::Exec::OpenMP);

// span{P(monomial), degree ≤ d} equals the span of circle words of length ≤ d
// over a basis of E(−1;σ), inside the degree-≤ d slice
bool p_span_check(const LieWithTriality& g, int degree);

struct MHEnvelope {
  int degree = 0;
  std::vector<IdentityCheck> identities;
  nlohmann::json counts;
  double seconds = 0;
  bool pass() const {
    for (const auto& e : identities)
      if (!e.pass) return false;
    return true;
  }
  nlohmann::json to_json() const;
};

// the degree-≤ d slice of MH(U(Lie(m))) generated by T_a = λ_a + ρ_a: bracket
// recovery, the two-sided multiplication agreement, the left Moufang–Hopf
// identity, independence of ordered circle words, a nonassociativity witness,
// and the alternative-nucleus conditions for the T generators
MHEnvelope mh_envelope(const LieOfMalcev& lm, int degree, par::Exec exec = par::Exec::OpenMP);

struct RelationCheck {
  bool pass = false;
  nlohmann::json witness;
  double seconds = 0;
};

// [L_a,L_b] = L_{[a,b]} − 2[L_a,R_b], [R_a,R_b] = −R_{[a,b]} − 2[L_a,R_b] and
// [L_a,R_b] = [R_a,L_b] for the *-multiplications by the images of the Malcev
// basis, compared on a spanning set of the degree-≤ d slice; the bracket used
// for the targets is a parameter so corrupted ones are detectable
RelationCheck envelope_relations_witness(const LieOfMalcev& lm, const AlgebraSC& bracket, int degree,
                                         par::Exec exec = par::Exec::OpenMP);
bool check_envelope_relations(const LieOfMalcev& lm, par::Exec exec = par::Exec::OpenMP);

}  // namespace triality
