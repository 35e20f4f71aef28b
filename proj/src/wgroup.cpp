#include "triality/wgroup.hpp"

#include <algorithm>

namespace triality {

namespace {
int left_normed_comm(const FiniteLoop& q, int u, int v) {
  return q.mul(q.mul(q.mul(q.inv(u), q.inv(v)), u), v);
}
}  // namespace

WGroup WGroup::build(const FiniteLoop& q, par::Exec exec) {
  WGroup w;
  w.q_ = q;
  const int n = q.order();
  w.atp_ = autotopy_group(q, exec);
  for (const auto& t : w.atp_)
    if (t.a2(0) == 0) w.psaut_.push_back({t.a2, t.a1(0)});
  std::sort(w.psaut_.begin(), w.psaut_.end());
  auto direct = pseudoautomorphism_group_direct(q, exec);
  if (!(w.psaut_ == direct))
    throw CheckError("psaut-mismatch", {{"via_atp", w.psaut_.size()}, {"direct", direct.size()}});
  for (int i = 0; i < static_cast<int>(w.psaut_.size()); ++i) w.pidx_.emplace(w.psaut_[static_cast<std::size_t>(i)], i);
  w.id_index_ = w.psaut_index({Perm::identity(n), 0});

  w.rfac_.reserve(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      PsAut f{q.R(u) * q.R(v) * q.R(q.mul(u, v)).inverse(), left_normed_comm(q, u, v)};
      if (!is_pseudoautomorphism(q, f)) throw CheckError("rfac-not-psaut", {{"u", u + 1}, {"v", v + 1}});
      if (!w.pidx_.count(f)) throw CheckError("rfac-not-listed", {{"u", u + 1}, {"v", v + 1}});
      w.rfac_.push_back(std::move(f));
    }
  w.tfac_.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    PsAut f{q.L(x).inverse() * q.R(x), q.power(x, -3)};
    if (!is_pseudoautomorphism(q, f)) throw CheckError("tfac-not-psaut", {{"x", x + 1}});
    if (!w.pidx_.count(f)) throw CheckError("tfac-not-listed", {{"x", x + 1}});
    w.tfac_.push_back(std::move(f));
  }

  if (w.atp_.size() != w.psaut_.size() * static_cast<std::size_t>(n))
    throw CheckError("atp-psaut-size", {{"atp", w.atp_.size()}, {"psaut", w.psaut_.size()}});
  w.psi_rev_.assign(w.atp_.size(), -1);
  for (std::size_t i = 0; i < w.atp_.size(); ++i) {
    WElem e = w.psi(w.atp_[i]);
    std::int64_t ei = w.element_index(e);
    if (w.psi_rev_[static_cast<std::size_t>(ei)] != -1) throw CheckError("psi-not-injective", {{"index", ei}});
    w.psi_rev_[static_cast<std::size_t>(ei)] = static_cast<int>(i);
  }
  if (!(w.psi(identity_triple(q)) == w.unit())) throw CheckError("psi-unit", {});
  return w;
}

int WGroup::psaut_index(const PsAut& p) const {
  auto it = pidx_.find(p);
  if (it == pidx_.end()) throw CheckError("w-not-closed", {{"companion", p.a + 1}});
  return it->second;
}

WElem WGroup::element(std::int64_t i) const {
  return {static_cast<int>(i / q_.order()), static_cast<int>(i % q_.order())};
}

WElem WGroup::mul(const WElem& u, const WElem& v) const {
  const int n = q_.order();
  const PsAut &pa = psaut_[static_cast<std::size_t>(u.p)], &pb = psaut_[static_cast<std::size_t>(v.p)];
  const int xb = pb.A(u.x);
  const PsAut cc = psaut_mul(q_, rfac_[static_cast<std::size_t>(pb.a) * n + xb],
                             rfac_[static_cast<std::size_t>(xb) * n + v.x]);
  PsAut prod = psaut_mul(q_, psaut_mul(q_, pa, pb), cc);
  return {psaut_index(prod), q_.mul(xb, v.x)};
}

WElem WGroup::rho(const WElem& u) const {
  WElem left{u.p, psaut_[static_cast<std::size_t>(u.p)].a};
  WElem right{psaut_index(tfac_[static_cast<std::size_t>(u.x)]), q_.power(u.x, -2)};
  return mul(left, right);
}

WElem WGroup::sigma(const WElem& u) const {
  PsAut p = psaut_mul(q_, psaut_[static_cast<std::size_t>(u.p)], tfac_[static_cast<std::size_t>(u.x)]);
  return {psaut_index(p), q_.inv(u.x)};
}

WElem WGroup::inv(const WElem& u) const {
  int slot = psi_rev_[static_cast<std::size_t>(element_index(u))];
  WElem r = psi(atp_[static_cast<std::size_t>(slot)].inverse());
  if (!(mul(u, r) == unit() && mul(r, u) == unit())) throw CheckError("w-inverse", {{"p", u.p}, {"x", u.x + 1}});
  return r;
}

WElem WGroup::psi(const AutotopyTriple& t) const {
  const int x = t.a2(0);
  PsAut p{t.a2 * q_.R(x).inverse(), q_.mul(t.a1(0), x)};
  return {psaut_index(p), x};
}

const AutotopyTriple& WGroup::psi_preimage(const WElem& w) const {
  return atp_[static_cast<std::size_t>(psi_rev_[static_cast<std::size_t>(element_index(w))])];
}

SampledReport check_w_associativity(const WGroup& w, par::Exec exec, std::int64_t cap,
                                    std::size_t samples, std::uint64_t seed) {
  const std::int64_t m = w.order();
  SampledReport rep;
  auto assoc = [&](WElem a, WElem b, WElem c) {
    return w.mul(w.mul(a, b), c) == w.mul(a, w.mul(b, c));
  };
  if (m <= cap) {
    rep.exhaustive = true;
    rep.checked = m * m * m;
    auto bad = par::first_violation(m * m * m, exec, [&](std::int64_t i) {
      return assoc(w.element(i / (m * m)), w.element((i / m) % m), w.element(i % m));
    });
    rep.pass = !bad.has_value();
    if (bad) rep.witness = {{"triple", *bad}};
    return rep;
  }
  rep.exhaustive = false;
  rep.checked = static_cast<std::int64_t>(samples);
  par::Rng rng(seed);
  std::vector<std::array<std::int64_t, 3>> picks(samples);
  for (auto& p : picks)
    p = {static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m))),
         static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m))),
         static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m)))};
  auto bad = par::first_violation(static_cast<std::int64_t>(samples), exec, [&](std::int64_t i) {
    const auto& p = picks[static_cast<std::size_t>(i)];
    return assoc(w.element(p[0]), w.element(p[1]), w.element(p[2]));
  });
  rep.pass = !bad.has_value();
  if (bad) rep.witness = {{"sample", *bad}};
  return rep;
}

SampledReport check_w_triality(const WGroup& w, par::Exec exec, std::int64_t pair_cap,
                               std::size_t samples, std::uint64_t seed) {
  const std::int64_t m = w.order();
  SampledReport rep;
  // per-element: S₃ relations and the triality identity
  auto elem_ok = [&](std::int64_t i) {
    WElem u = w.element(i);
    if (!(w.sigma(w.sigma(u)) == u)) return false;
    if (!(w.rho(w.rho(w.rho(u))) == u)) return false;
    if (!(w.rho(w.sigma(u)) == w.sigma(w.rho(w.rho(u))))) return false;
    WElem t = w.mul(w.inv(u), w.sigma(u));
    WElem tr = w.rho(t);
    return w.mul(w.mul(t, tr), w.rho(tr)) == w.unit();
  };
  auto bad = par::first_violation(m, exec, elem_ok);
  if (bad) {
    rep.witness = {{"element", *bad}};
    return rep;
  }
  // automorphism property on pairs
  auto pair_ok = [&](WElem a, WElem b) {
    return w.rho(w.mul(a, b)) == w.mul(w.rho(a), w.rho(b)) &&
           w.sigma(w.mul(a, b)) == w.mul(w.sigma(a), w.sigma(b));
  };
  if (m <= pair_cap) {
    rep.exhaustive = true;
    rep.checked = m + m * m;
    auto badp = par::first_violation(m * m, exec, [&](std::int64_t i) {
      return pair_ok(w.element(i / m), w.element(i % m));
    });
    rep.pass = !badp.has_value();
    if (badp) rep.witness = {{"pair", *badp}};
    return rep;
  }
  rep.exhaustive = false;
  rep.checked = m + static_cast<std::int64_t>(samples);
  par::Rng rng(seed);
  std::vector<std::array<std::int64_t, 2>> picks(samples);
  for (auto& p : picks)
    p = {static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m))),
         static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m)))};
  auto badp = par::first_violation(static_cast<std::int64_t>(samples), exec, [&](std::int64_t i) {
    const auto& p = picks[static_cast<std::size_t>(i)];
    return pair_ok(w.element(p[0]), w.element(p[1]));
  });
  rep.pass = !badp.has_value();
  if (badp) rep.witness = {{"sample", *badp}};
  return rep;
}

SampledReport check_psi(const WGroup& w, par::Exec exec, std::int64_t pair_cap, std::size_t samples,
                        std::uint64_t seed) {
  const auto& atp = w.atp();
  const FiniteLoop& q = w.loop();
  const std::int64_t m = static_cast<std::int64_t>(atp.size());
  SampledReport rep;
  // equivariance per element
  auto elem_ok = [&](std::int64_t i) {
    const auto& t = atp[static_cast<std::size_t>(i)];
    return w.psi(atp_rho(q, t)) == w.rho(w.psi(t)) && w.psi(atp_sigma(q, t)) == w.sigma(w.psi(t));
  };
  auto bad = par::first_violation(m, exec, elem_ok);
  if (bad) {
    rep.witness = {{"element", *bad}};
    return rep;
  }
  auto pair_ok = [&](const AutotopyTriple& s, const AutotopyTriple& t) {
    return w.psi(s * t) == w.mul(w.psi(s), w.psi(t));
  };
  if (m <= pair_cap) {
    rep.exhaustive = true;
    rep.checked = m + m * m;
    auto badp = par::first_violation(m * m, exec, [&](std::int64_t i) {
      return pair_ok(atp[static_cast<std::size_t>(i / m)], atp[static_cast<std::size_t>(i % m)]);
    });
    rep.pass = !badp.has_value();
    if (badp) rep.witness = {{"pair", *badp}};
    return rep;
  }
  rep.exhaustive = false;
  rep.checked = m + static_cast<std::int64_t>(samples);
  par::Rng rng(seed);
  std::vector<std::array<std::int64_t, 2>> picks(samples);
  for (auto& p : picks)
    p = {static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m))),
         static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m)))};
  auto badp = par::first_violation(static_cast<std::int64_t>(samples), exec, [&](std::int64_t i) {
    const auto& p = picks[static_cast<std::size_t>(i)];
    return pair_ok(atp[static_cast<std::size_t>(p[0])], atp[static_cast<std::size_t>(p[1])]);
  });
  rep.pass = !badp.has_value();
  if (badp) rep.witness = {{"sample", *badp}};
  return rep;
}

}  // namespace triality
