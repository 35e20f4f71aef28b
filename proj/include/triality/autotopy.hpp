#pragma once
#include <array>
#include <optional>
#include <tuple>
#include <vector>

#include "triality/gtriality.hpp"
#include "triality/loop.hpp"

namespace triality {

// (A₁,A₂,A₃) with (xy)^{A₁} = x^{A₂}·y^{A₃}; componentwise composition
struct AutotopyTriple {
  Perm a1, a2, a3;

  AutotopyTriple operator*(const AutotopyTriple& o) const { return {a1 * o.a1, a2 * o.a2, a3 * o.a3}; }
  AutotopyTriple inverse() const { return {a1.inverse(), a2.inverse(), a3.inverse()}; }
  bool is_identity() const { return a1.is_identity() && a2.is_identity() && a3.is_identity(); }
  bool operator==(const AutotopyTriple& o) const { return a1 == o.a1 && a2 == o.a2 && a3 == o.a3; }
  bool operator<(const AutotopyTriple& o) const {
    return std::tie(a1, a2, a3) < std::tie(o.a1, o.a2, o.a3);
  }
};

// least (x,y) with (xy)^{A₁} ≠ x^{A₂}·y^{A₃}, or nullopt
std::optional<std::array<int, 2>> autotopy_witness(const FiniteLoop& q, const AutotopyTriple& t,
                                                   par::Exec exec = par::Exec::OpenMP);
bool is_autotopy(const FiniteLoop& q, const AutotopyTriple& t, par::Exec exec = par::Exec::OpenMP);

AutotopyTriple identity_triple(const FiniteLoop& q);
// the three canonical families (L_x, U_x, L_x⁻¹), (R_x, R_x⁻¹, U_x), (U_x, L_x, R_x)
std::vector<AutotopyTriple> canonical_triples(const FiniteLoop& q);

// complete enumeration of Atp(Q); backtracks over the middle component on a
// generating set plus the two companions, then re-validates every candidate
std::vector<AutotopyTriple> autotopy_group(const FiniteLoop& q, par::Exec exec = par::Exec::OpenMP);
// filter of all (n!)³ triples; oracle for tiny loops
std::vector<AutotopyTriple> autotopy_group_bruteforce(const FiniteLoop& q);

// (A₁,A₂,A₃)^ρ = (JA₂J, A₃, JA₁J), (A₁,A₂,A₃)^σ = (A₃, JA₂J, A₁)
AutotopyTriple atp_rho(const FiniteLoop& q, const AutotopyTriple& t);
AutotopyTriple atp_sigma(const FiniteLoop& q, const AutotopyTriple& t);

// context adapter so the group-with-triality checks run on Atp(Q)
struct AtpCtx {
  using Elem = AutotopyTriple;
  const FiniteLoop* q;
  std::vector<AutotopyTriple> els;
  AtpCtx(const FiniteLoop& loop, std::vector<AutotopyTriple> atp) : q(&loop), els(std::move(atp)) {}
  const std::vector<AutotopyTriple>& elements() const { return els; }
  AutotopyTriple mul(const AutotopyTriple& a, const AutotopyTriple& b) const { return a * b; }
  AutotopyTriple inv(const AutotopyTriple& a) const { return a.inverse(); }
  AutotopyTriple unit() const { return identity_triple(*q); }
  AutotopyTriple rho(const AutotopyTriple& a) const { return atp_rho(*q, a); }
  AutotopyTriple sigma(const AutotopyTriple& a) const { return atp_sigma(*q, a); }
};

struct AtpTrialityReport {
  bool pass = false;
  bool exhaustive = false;
  std::int64_t checked = 0;
  std::optional<AutotopyTriple> witness;
};
// Eq.-(3)-style identity inside Atp(Q); exhaustive when |Atp| ≤ cap, otherwise
// seeded samples plus every canonical triple
AtpTrialityReport check_atp_triality(const FiniteLoop& q, const std::vector<AutotopyTriple>& atp,
                                     par::Exec exec = par::Exec::OpenMP, std::size_t cap = 100'000,
                                     std::size_t samples = 10'000, std::uint64_t seed = 1);

struct PsAut {
  Perm A;
  int a = 0;  // right companion
  bool operator==(const PsAut& o) const { return A == o.A && a == o.a; }
  bool operator<(const PsAut& o) const { return std::tie(A, a) < std::tie(o.A, o.a); }
};
PsAut psaut_mul(const FiniteLoop& q, const PsAut& x, const PsAut& y);
bool is_pseudoautomorphism(const FiniteLoop& q, const PsAut& p);

// enumerated two independent ways (Atp filter vs direct search) and compared
std::vector<PsAut> pseudoautomorphism_group(const FiniteLoop& q, par::Exec exec = par::Exec::OpenMP);
std::vector<PsAut> pseudoautomorphism_group_direct(const FiniteLoop& q, par::Exec exec = par::Exec::OpenMP);

// M(Atp(Q)) together with the isomorphism (L_b⁻¹, U_b⁻¹, L_b) ↦ b onto Q
struct MAtpResult {
  MoufangOf<AutotopyTriple> m;
  std::vector<int> to_loop;  // carrier slot ↦ loop element
};
MAtpResult m_of_atp(const FiniteLoop& q, const std::vector<AutotopyTriple>& atp,
                    par::Exec exec = par::Exec::OpenMP);

// t = d·r with d = (A′, A, A′), 1^{A} = 1, r = (R_x⁻¹, R_x, U_x⁻¹), x = 1^{A₂}
std::pair<AutotopyTriple, AutotopyTriple> decompose_autotopy(const FiniteLoop& q, const AutotopyTriple& t);

// x ↦ (m ↦ x^{-ρ²σ} m x^{ρ²}, m ↦ x⁻¹ m x^σ, m ↦ x^{-ρ} m x^{ρσ}) over the
// carrier of M(G); a homomorphism of groups with triality with kernel Z_{S₃}(G)
struct EmbedResult {
  std::vector<AutotopyTriple> image;  // indexed by group element
  std::vector<int> kernel;            // group elements mapping to the identity triple
};
EmbedResult embed_into_autotopy(const TrialityGroup& tg, const MLoopResult& ml,
                                par::Exec exec = par::Exec::OpenMP);

}  // namespace triality
