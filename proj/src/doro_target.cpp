#include <algorithm>
#include <set>

#include "triality/hopf.hpp"

namespace triality {

int AtpGroup::index_of(const AutotopyTriple& t) const {
  auto it = index.find(t);
  if (it == index.end()) throw CheckError("not-in-atp", {});
  return it->second;
}

AtpGroup atp_as_triality_group(const FiniteLoop& q, par::Exec exec) {
  std::vector<AutotopyTriple> triples = autotopy_group(q, exec);
  std::sort(triples.begin(), triples.end());
  auto id = identity_triple(q);
  auto it = std::find(triples.begin(), triples.end(), id);
  if (it == triples.end()) throw CheckError("atp-missing-identity", {});
  std::rotate(triples.begin(), it, it + 1);

  const int n = static_cast<int>(triples.size());
  std::map<AutotopyTriple, int> index;
  for (int i = 0; i < n; ++i) index.emplace(triples[static_cast<std::size_t>(i)], i);
  auto idx = [&](const AutotopyTriple& t) {
    auto f = index.find(t);
    if (f == index.end()) throw CheckError("not-in-atp", {});
    return f->second;
  };

  std::vector<int> tab(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      tab[static_cast<std::size_t>(i) * n + j] =
          idx(triples[static_cast<std::size_t>(i)] * triples[static_cast<std::size_t>(j)]);
  FiniteGroup g = FiniteGroup::from_table(n, std::move(tab), exec);

  std::vector<int> ri(static_cast<std::size_t>(n)), si(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ri[static_cast<std::size_t>(i)] = idx(atp_rho(q, triples[static_cast<std::size_t>(i)]));
    si[static_cast<std::size_t>(i)] = idx(atp_sigma(q, triples[static_cast<std::size_t>(i)]));
  }
  return AtpGroup{TrialityGroup::make(std::move(g), Perm(std::move(ri)), Perm(std::move(si))),
                  std::move(triples), std::move(index)};
}

LoopReport verify_doro_target(const MoufangHopfCarrier& u, const HopfCarrier& target,
                              const std::vector<int>& phi, par::Exec exec) {
  const FiniteLoop& Q = u.basis;
  const FiniteLoop& B = target.basis;
  const int n = Q.order();
  if (static_cast<int>(phi.size()) != n) throw CheckError("bad-phi-size", {{"expected", n}});
  for (int x : phi)
    if (x < 0 || x >= B.order()) throw CheckError("bad-phi-image", {{"value", x}});

  // symbol images: φ̄(P_m) = φ(m), φ̄(L_m) = ρφ(m), φ̄(R_m) = ρ²φ(m)
  std::vector<int> p(phi), l(static_cast<std::size_t>(n)), r(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    l[static_cast<std::size_t>(m)] = target.rho(p[static_cast<std::size_t>(m)]);
    r[static_cast<std::size_t>(m)] = target.rho(l[static_cast<std::size_t>(m)]);
  }
  std::vector<char> in_mh(static_cast<std::size_t>(B.order()), 0);
  for (int g = 0; g < B.order(); ++g) in_mh[static_cast<std::size_t>(p_basis(target, g))] = 1;

  LoopReport rep;
  rep.check = "doro-target";
  rep.counts = {{"basis", n}, {"pairs", static_cast<std::int64_t>(n) * n}};
  auto single = [&](const char* name, bool pass, nlohmann::json w) {
    rep.identities.push_back({name, pass, pass ? nlohmann::json() : std::move(w)});
  };
  auto scan_m = [&](const char* name, auto&& ok) {
    auto hit = par::first_violation(n, exec, [&](std::int64_t m) { return ok(static_cast<int>(m)); });
    single(name, !hit.has_value(), hit ? nlohmann::json{{"m", static_cast<int>(*hit) + 1}} : nlohmann::json());
  };
  auto scan_mn = [&](const char* name, auto&& ok) {
    auto hit = par::first_violation(static_cast<std::int64_t>(n) * n, exec, [&](std::int64_t i) {
      return ok(static_cast<int>(i / n), static_cast<int>(i % n));
    });
    nlohmann::json w;
    if (hit) w = {{"m", static_cast<int>(*hit / n) + 1}, {"n", static_cast<int>(*hit % n) + 1}};
    single(name, !hit.has_value(), std::move(w));
  };
  auto mul3 = [&](int a, int b, int c) { return B.mul(B.mul(a, b), c); };

  single("unit", p[0] == B.unit() && l[0] == B.unit() && r[0] == B.unit(), {{"m", 1}});
  {
    std::set<int> distinct(p.begin(), p.end());
    single("phi-injective", static_cast<int>(distinct.size()) == n, {});
  }
  scan_m("phi-in-mh", [&](int m) { return in_mh[static_cast<std::size_t>(p[m])] != 0; });
  scan_mn("phi-multiplicative", [&](int m, int x) {
    int pi = B.inv(p[m]);
    return mul3(target.rho(target.rho(pi)), p[x], target.rho(pi)) == p[Q.mul(m, x)];
  });
  scan_m("sigma-equivariance", [&](int m) {
    int s = Q.inv(m);
    return target.sigma(p[m]) == p[s] && target.sigma(l[m]) == r[s] && target.sigma(r[m]) == l[s];
  });
  scan_m("antipode-compat", [&](int m) { return p[Q.inv(m)] == B.inv(p[m]); });
  scan_m("counit-triple", [&](int m) { return mul3(p[m], l[m], r[m]) == B.unit(); });
  scan_mn("flexible", [&](int m, int x) { return Q.mul(Q.mul(m, x), m) == Q.mul(m, Q.mul(x, m)); });
  auto mnm = [&](int m, int x) { return Q.mul(Q.mul(m, x), m); };
  scan_mn("sandwich-p", [&](int m, int x) { return mul3(p[m], p[x], p[m]) == p[mnm(m, x)]; });
  scan_mn("sandwich-l", [&](int m, int x) { return mul3(l[m], l[x], l[m]) == l[mnm(m, x)]; });
  scan_mn("sandwich-r", [&](int m, int x) { return mul3(r[m], r[x], r[m]) == r[mnm(m, x)]; });
  scan_mn("left-twist-p", [&](int m, int x) { return mul3(r[m], p[x], l[m]) == p[Q.mul(Q.inv(m), x)]; });
  scan_mn("left-twist-l", [&](int m, int x) { return mul3(p[m], l[x], r[m]) == l[Q.mul(Q.inv(m), x)]; });
  scan_mn("left-twist-r", [&](int m, int x) { return mul3(l[m], r[x], p[m]) == r[Q.mul(Q.inv(m), x)]; });
  scan_mn("right-twist-p", [&](int m, int x) { return mul3(l[m], p[x], r[m]) == p[Q.mul(x, Q.inv(m))]; });
  scan_mn("right-twist-l", [&](int m, int x) { return mul3(r[m], l[x], p[m]) == l[Q.mul(x, Q.inv(m))]; });
  scan_mn("right-twist-r", [&](int m, int x) { return mul3(p[m], r[x], l[m]) == r[Q.mul(x, Q.inv(m))]; });
  return rep;
}

}  // namespace triality
