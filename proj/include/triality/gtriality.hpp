#pragma once
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "triality/group.hpp"
#include "triality/loop.hpp"

namespace triality {

// A group together with two automorphisms generating an S₃-action. Exponent
// strings read left to right: g^{ρσ} = (g^ρ)^σ, matching Perm composition.
struct TrialityGroup {
  FiniteGroup g;
  Perm rho, sigma;

  static TrialityGroup make(FiniteGroup g, Perm rho, Perm sigma);
  static TrialityGroup from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// --- generic core -----------------------------------------------------------
//
// The same checks run on Cayley-table groups (Elem = int) and on autotopy
// groups (Elem = permutation triple). A context supplies:
//   using Elem;                          ordered, equality-comparable
//   const std::vector<Elem>& elements()
//   Elem mul(a, b) / inv(a) / unit()
//   Elem rho(a) / sigma(a)

// least-index g with (g⁻¹g^σ)(g⁻¹g^σ)^ρ(g⁻¹g^σ)^{ρ²} ≠ 1, if any
template <class Ctx>
std::optional<typename Ctx::Elem> triality_witness(const Ctx& c, par::Exec exec = par::Exec::OpenMP) {
  const auto& el = c.elements();
  auto ok = [&](std::int64_t i) {
    const auto& g = el[static_cast<std::size_t>(i)];
    auto m = c.mul(c.inv(g), c.sigma(g));
    auto t = c.mul(c.mul(m, c.rho(m)), c.rho(c.rho(m)));
    return t == c.unit();
  };
  auto bad = par::first_violation(static_cast<std::int64_t>(el.size()), exec, ok);
  if (!bad) return std::nullopt;
  return el[static_cast<std::size_t>(*bad)];
}

template <class Elem>
struct MoufangOf {
  std::vector<Elem> carrier;  // unit first, then ascending
  FiniteLoop loop;
  std::vector<Elem> section;  // one preimage g per carrier slot, g⁻¹g^σ = carrier[i]
};

// M(G) = {g⁻¹g^σ} with m·n = m^{-ρ} n m^{-ρ²}; both product formulas compared,
// closure and the Moufang identities verified.
template <class Ctx>
MoufangOf<typename Ctx::Elem> moufang_of(const Ctx& c, par::Exec exec = par::Exec::OpenMP,
                                         bool reverse_scan = false) {
  using Elem = typename Ctx::Elem;
  const auto& el = c.elements();
  std::map<Elem, Elem> sect;
  for (std::size_t k = 0; k < el.size(); ++k) {
    const Elem& g = el[reverse_scan ? el.size() - 1 - k : k];
    Elem m = c.mul(c.inv(g), c.sigma(g));
    sect.emplace(m, g);  // keeps the first preimage seen
  }
  MoufangOf<Elem> r;
  r.carrier.push_back(c.unit());
  for (const auto& [m, g] : sect)
    if (!(m == c.unit())) r.carrier.push_back(m);
  std::map<Elem, int> index;
  for (std::size_t i = 0; i < r.carrier.size(); ++i) {
    r.section.push_back(sect.at(r.carrier[i]));
    index.emplace(r.carrier[i], static_cast<int>(i));
  }
  const int n = static_cast<int>(r.carrier.size());
  std::vector<int> tab(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Elem &m = r.carrier[static_cast<std::size_t>(i)], &x = r.carrier[static_cast<std::size_t>(j)];
      Elem mi = c.inv(m), xi = c.inv(x);
      Elem p1 = c.mul(c.mul(c.rho(mi), x), c.rho(c.rho(mi)));
      Elem p2 = c.mul(c.mul(c.rho(c.rho(xi)), m), c.rho(xi));
      if (!(p1 == p2)) throw CheckError("mloop-formula-disagreement", {{"i", i + 1}, {"j", j + 1}});
      auto it = index.find(p1);
      if (it == index.end()) throw CheckError("mloop-not-closed", {{"i", i + 1}, {"j", j + 1}});
      tab[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  r.loop = FiniteLoop::from_table(n, std::move(tab));
  if (!check_moufang(r.loop, exec).pass()) throw CheckError("mloop-not-moufang", {});
  return r;
}

// {z : z^ρ = z^σ = z, z central against every g⁻¹g^τ}; checked normal
template <class Ctx>
std::vector<typename Ctx::Elem> s3_center_of(const Ctx& c) {
  using Elem = typename Ctx::Elem;
  const auto& el = c.elements();
  std::function<Elem(const Elem&)> r = [&](const Elem& x) { return c.rho(x); };
  std::function<Elem(const Elem&)> s = [&](const Elem& x) { return c.sigma(x); };
  std::vector<std::function<Elem(const Elem&)>> taus = {
      r,
      [&](const Elem& x) { return c.rho(c.rho(x)); },
      s,
      [&](const Elem& x) { return c.sigma(c.rho(x)); },
      [&](const Elem& x) { return c.sigma(c.rho(c.rho(x))); }};
  std::vector<Elem> displaced;
  {
    std::map<Elem, char> seen;
    for (const auto& g : el)
      for (const auto& tau : taus) {
        Elem m = c.mul(c.inv(g), tau(g));
        if (seen.emplace(m, 1).second) displaced.push_back(m);
      }
  }
  std::vector<Elem> z;
  for (const auto& x : el) {
    if (!(c.rho(x) == x) || !(c.sigma(x) == x)) continue;
    bool central = true;
    for (const auto& m : displaced)
      if (!(c.mul(x, m) == c.mul(m, x))) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  std::map<Elem, char> zset;
  for (const auto& x : z) zset.emplace(x, 1);
  for (const auto& a : z)
    for (const auto& b : z)
      if (!zset.count(c.mul(a, c.inv(b)))) throw CheckError("s3-center-not-subgroup", {});
  for (const auto& g : el)
    for (const auto& a : z)
      if (!zset.count(c.mul(c.mul(c.inv(g), a), g))) throw CheckError("s3-center-not-normal", {});
  return z;
}

// --- Cayley-table instantiation ---------------------------------------------

struct TableCtx {
  using Elem = int;
  const TrialityGroup* tg;
  std::vector<int> idx;
  explicit TableCtx(const TrialityGroup& t) : tg(&t) {
    idx.resize(static_cast<std::size_t>(t.g.order()));
    for (int i = 0; i < t.g.order(); ++i) idx[static_cast<std::size_t>(i)] = i;
  }
  const std::vector<int>& elements() const { return idx; }
  int mul(int a, int b) const { return tg->g.mul(a, b); }
  int inv(int a) const { return tg->g.inv(a); }
  int unit() const { return 0; }
  int rho(int a) const { return tg->rho(a); }
  int sigma(int a) const { return tg->sigma(a); }
};

struct TrialityCheck {
  bool pass = false;
  std::optional<int> witness;  // least failing group index
};
TrialityCheck check_triality(const TrialityGroup& tg, par::Exec exec = par::Exec::OpenMP);

struct MLoopResult {
  std::vector<int> carrier;  // group element indices, unit first then ascending
  FiniteLoop loop;
  std::vector<int> section;
};
MLoopResult moufang_from_triality(const TrialityGroup& tg, par::Exec exec = par::Exec::OpenMP,
                                  bool reverse_scan = false);

std::vector<int> s3_center(const TrialityGroup& tg);

// S₃×S₃×S₃ with ρ the coordinate 3-cycle and σ the swap of the first two
// coordinates; the standard nontrivial triality fixture
TrialityGroup wreath_s3_cubed();
// C₄ with σ = inversion, ρ = id; fails the triality identity
TrialityGroup c4_inversion();

}  // namespace triality
