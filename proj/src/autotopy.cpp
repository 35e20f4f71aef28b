#include "triality/autotopy.hpp"

#include <algorithm>
#include <map>

namespace triality {

std::optional<std::array<int, 2>> autotopy_witness(const FiniteLoop& q, const AutotopyTriple& t,
                                                   par::Exec exec) {
  const int n = q.order();
  if (t.a1.size() != n || t.a2.size() != n || t.a3.size() != n)
    throw CheckError("bad-perm-size", {{"order", n}});
  auto ok = [&](std::int64_t i) {
    int x = static_cast<int>(i / n), y = static_cast<int>(i % n);
    return t.a1(q.mul(x, y)) == q.mul(t.a2(x), t.a3(y));
  };
  auto bad = par::first_violation(static_cast<std::int64_t>(n) * n, exec, ok);
  if (!bad) return std::nullopt;
  return std::array<int, 2>{static_cast<int>(*bad / n), static_cast<int>(*bad % n)};
}

bool is_autotopy(const FiniteLoop& q, const AutotopyTriple& t, par::Exec exec) {
  return !autotopy_witness(q, t, exec).has_value();
}

AutotopyTriple identity_triple(const FiniteLoop& q) {
  Perm e = Perm::identity(q.order());
  return {e, e, e};
}

std::vector<AutotopyTriple> canonical_triples(const FiniteLoop& q) {
  std::vector<AutotopyTriple> out;
  for (int x = 0; x < q.order(); ++x) {
    Perm l = q.L(x), r = q.R(x), u = q.U(x);
    out.push_back({l, u, l.inverse()});
    out.push_back({r, r.inverse(), u});
    out.push_back({u, l, r});
  }
  return out;
}

AutotopyTriple atp_rho(const FiniteLoop& q, const AutotopyTriple& t) {
  Perm j = q.J();
  return {j * t.a2 * j, t.a3, j * t.a1 * j};
}

AutotopyTriple atp_sigma(const FiniteLoop& q, const AutotopyTriple& t) {
  Perm j = q.J();
  return {t.a3, j * t.a2 * j, t.a1};
}

namespace {

// ordered pairs (x, y, xy) scheduled so both coordinates are already known
// (seeds first, then BFS products); every ordered pair appears exactly once
struct Schedule {
  std::vector<int> seeds;                  // unit, then generators
  std::vector<std::array<int, 3>> steps;   // {x, y, xy}
};

Schedule make_schedule(const FiniteLoop& q, const std::vector<int>& gens) {
  const int n = q.order();
  Schedule s;
  std::vector<char> known(static_cast<std::size_t>(n), 0);
  std::vector<int> have;
  std::size_t next_pair = 0;
  auto add = [&](int w) {
    if (known[static_cast<std::size_t>(w)]) return;
    known[static_cast<std::size_t>(w)] = 1;
    for (int v : have) {
      s.steps.push_back({w, v, q.mul(w, v)});
      s.steps.push_back({v, w, q.mul(v, w)});
    }
    s.steps.push_back({w, w, q.mul(w, w)});
    have.push_back(w);
  };
  s.seeds.push_back(0);
  add(0);
  for (int g : gens)
    if (!known[static_cast<std::size_t>(g)]) {
      s.seeds.push_back(g);
      add(g);
    }
  while (next_pair < s.steps.size()) {
    add(s.steps[next_pair][2]);
    ++next_pair;
  }
  if (static_cast<int>(have.size()) != n) throw CheckError("not-generating", {{"got", have.size()}});
  return s;
}

}  // namespace

std::vector<AutotopyTriple> autotopy_group(const FiniteLoop& q, par::Exec exec) {
  const int n = q.order();
  if (n > 16) throw CheckError("order-cap", {{"order", n}, {"cap", 16}});
  std::vector<int> gens = q.find_generators();
  gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
  const Schedule sched = make_schedule(q, gens);
  const int k = static_cast<int>(gens.size());

  // root = choice of a = 1^{A₂}, b = 1^{A₃}, and A₂-images of the generators;
  // everything else is forced by ((xy)^{A₂})b = x^{A₂}·(a⁻¹((y^{A₂})b))
  std::int64_t combos = 1;
  for (int i = 0; i < k; ++i) combos *= n;
  auto run_block = [&](std::int64_t ab) -> std::optional<std::vector<AutotopyTriple>> {
    const int a = static_cast<int>(ab / n), b = static_cast<int>(ab % n);
    std::vector<int> la_inv(static_cast<std::size_t>(n)), rb(static_cast<std::size_t>(n)),
        rb_inv(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y) {
      la_inv[static_cast<std::size_t>(q.mul(a, y))] = y;
      rb[static_cast<std::size_t>(y)] = q.mul(y, b);
      rb_inv[static_cast<std::size_t>(q.mul(y, b))] = y;
    }
    std::vector<AutotopyTriple> found;
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n));
    for (std::int64_t combo = 0; combo < combos; ++combo) {
      std::fill(img.begin(), img.end(), -1);
      std::fill(used.begin(), used.end(), 0);
      bool alive = true;
      auto place = [&](int x, int v) {
        if (img[static_cast<std::size_t>(x)] == -1) {
          if (used[static_cast<std::size_t>(v)]) return false;
          img[static_cast<std::size_t>(x)] = v;
          used[static_cast<std::size_t>(v)] = 1;
          return true;
        }
        return img[static_cast<std::size_t>(x)] == v;
      };
      alive = place(0, a);
      std::int64_t c = combo;
      for (int i = 0; alive && i < k; ++i) {
        alive = place(gens[static_cast<std::size_t>(i)], static_cast<int>(c % n));
        c /= n;
      }
      for (const auto& st : sched.steps) {
        if (!alive) break;
        int ix = img[static_cast<std::size_t>(st[0])], iy = img[static_cast<std::size_t>(st[1])];
        int forced = rb_inv[static_cast<std::size_t>(q.mul(ix, la_inv[static_cast<std::size_t>(rb[static_cast<std::size_t>(iy)])]))];
        alive = place(st[2], forced);
      }
      if (!alive) continue;
      Perm a2(img);
      std::vector<int> i1(static_cast<std::size_t>(n)), i3(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        i1[static_cast<std::size_t>(x)] = rb[static_cast<std::size_t>(a2(x))];
        i3[static_cast<std::size_t>(x)] = la_inv[static_cast<std::size_t>(i1[static_cast<std::size_t>(x)])];
      }
      AutotopyTriple t{Perm(i1), std::move(a2), Perm(i3)};
      if (is_autotopy(q, t, par::Exec::Serial)) found.push_back(std::move(t));
    }
    if (found.empty()) return std::nullopt;
    return found;
  };
  auto blocks = par::collect_hits(static_cast<std::int64_t>(n) * n, exec, run_block);
  std::vector<AutotopyTriple> out;
  for (auto& blk : blocks)
    for (auto& t : blk) out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AutotopyTriple> autotopy_group_bruteforce(const FiniteLoop& q) {
  const int n = q.order();
  if (n > 4) throw CheckError("brute-force-cap", {{"order", n}, {"cap", 4}});
  std::vector<Perm> all;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  do
    all.push_back(Perm(img));
  while (std::next_permutation(img.begin(), img.end()));
  std::vector<AutotopyTriple> out;
  for (const Perm& p1 : all)
    for (const Perm& p2 : all)
      for (const Perm& p3 : all) {
        AutotopyTriple t{p1, p2, p3};
        if (is_autotopy(q, t, par::Exec::Serial)) out.push_back(t);
      }
  std::sort(out.begin(), out.end());
  return out;
}

AtpTrialityReport check_atp_triality(const FiniteLoop& q, const std::vector<AutotopyTriple>& atp,
                                     par::Exec exec, std::size_t cap, std::size_t samples,
                                     std::uint64_t seed) {
  AtpCtx ctx(q, atp);
  auto id = identity_triple(q);
  auto holds = [&](const AutotopyTriple& t) {
    AutotopyTriple m = t.inverse() * atp_sigma(q, t);
    AutotopyTriple mr = atp_rho(q, m);
    if (!((m * mr) * atp_rho(q, mr) == id)) return false;
    // S₃ relations on the element
    if (!(atp_sigma(q, atp_sigma(q, t)) == t)) return false;
    if (!(atp_rho(q, atp_rho(q, atp_rho(q, t))) == t)) return false;
    return atp_rho(q, atp_sigma(q, t)) == atp_sigma(q, atp_rho(q, atp_rho(q, t)));
  };
  AtpTrialityReport rep;
  if (atp.size() <= cap) {
    rep.exhaustive = true;
    rep.checked = static_cast<std::int64_t>(atp.size());
    auto bad = par::first_violation(static_cast<std::int64_t>(atp.size()), exec,
                                    [&](std::int64_t i) { return holds(atp[static_cast<std::size_t>(i)]); });
    rep.pass = !bad.has_value();
    if (bad) rep.witness = atp[static_cast<std::size_t>(*bad)];
    return rep;
  }
  rep.exhaustive = false;
  std::vector<AutotopyTriple> picked = canonical_triples(q);
  par::Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i)
    picked.push_back(atp[static_cast<std::size_t>(rng.below(atp.size()))]);
  rep.checked = static_cast<std::int64_t>(picked.size());
  auto bad = par::first_violation(static_cast<std::int64_t>(picked.size()), exec,
                                  [&](std::int64_t i) { return holds(picked[static_cast<std::size_t>(i)]); });
  rep.pass = !bad.has_value();
  if (bad) rep.witness = picked[static_cast<std::size_t>(*bad)];
  return rep;
}

PsAut psaut_mul(const FiniteLoop& q, const PsAut& x, const PsAut& y) {
  return {x.A * y.A, q.mul(y.A(x.a), y.a)};
}

bool is_pseudoautomorphism(const FiniteLoop& q, const PsAut& p) {
  const int n = q.order();
  if (p.A.size() != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.mul(p.A(x), q.mul(p.A(y), p.a)) != q.mul(p.A(q.mul(x, y)), p.a)) return false;
  return true;
}

std::vector<PsAut> pseudoautomorphism_group_direct(const FiniteLoop& q, par::Exec exec) {
  const int n = q.order();
  std::vector<int> gens = q.find_generators();
  gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
  const Schedule sched = make_schedule(q, gens);
  const int k = static_cast<int>(gens.size());
  std::int64_t combos = 1;
  for (int i = 0; i < k; ++i) combos *= n;
  // 1^A = 1 always; root = companion + generator images,
  // propagation from ((xy)A)c = (xA)·((yA)c)
  auto run_block = [&](std::int64_t cval) -> std::optional<std::vector<PsAut>> {
    const int comp = static_cast<int>(cval);
    std::vector<int> rc(static_cast<std::size_t>(n)), rc_inv(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y) {
      rc[static_cast<std::size_t>(y)] = q.mul(y, comp);
      rc_inv[static_cast<std::size_t>(q.mul(y, comp))] = y;
    }
    std::vector<PsAut> found;
    std::vector<int> img(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n));
    for (std::int64_t combo = 0; combo < combos; ++combo) {
      std::fill(img.begin(), img.end(), -1);
      std::fill(used.begin(), used.end(), 0);
      bool alive = true;
      auto place = [&](int x, int v) {
        if (img[static_cast<std::size_t>(x)] == -1) {
          if (used[static_cast<std::size_t>(v)]) return false;
          img[static_cast<std::size_t>(x)] = v;
          used[static_cast<std::size_t>(v)] = 1;
          return true;
        }
        return img[static_cast<std::size_t>(x)] == v;
      };
      alive = place(0, 0);
      std::int64_t c = combo;
      for (int i = 0; alive && i < k; ++i) {
        alive = place(gens[static_cast<std::size_t>(i)], static_cast<int>(c % n));
        c /= n;
      }
      for (const auto& st : sched.steps) {
        if (!alive) break;
        int ix = img[static_cast<std::size_t>(st[0])], iy = img[static_cast<std::size_t>(st[1])];
        alive = place(st[2], rc_inv[static_cast<std::size_t>(q.mul(ix, rc[static_cast<std::size_t>(iy)]))]);
      }
      if (!alive) continue;
      PsAut p{Perm(img), comp};
      if (is_pseudoautomorphism(q, p)) found.push_back(std::move(p));
    }
    if (found.empty()) return std::nullopt;
    return found;
  };
  auto blocks = par::collect_hits(n, exec, run_block);
  std::vector<PsAut> out;
  for (auto& blk : blocks)
    for (auto& p : blk) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PsAut> pseudoautomorphism_group(const FiniteLoop& q, par::Exec exec) {
  auto atp = autotopy_group(q, exec);
  std::vector<PsAut> via_atp;
  for (const auto& t : atp)
    if (t.a2(0) == 0) via_atp.push_back({t.a2, t.a1(0)});
  std::sort(via_atp.begin(), via_atp.end());
  auto direct = pseudoautomorphism_group_direct(q, exec);
  if (!(via_atp == direct))
    throw CheckError("psaut-mismatch", {{"via_atp", via_atp.size()}, {"direct", direct.size()}});
  return via_atp;
}

MAtpResult m_of_atp(const FiniteLoop& q, const std::vector<AutotopyTriple>& atp, par::Exec exec) {
  const int n = q.order();
  AtpCtx ctx(q, atp);
  MAtpResult r{moufang_of(ctx, exec), {}};
  std::vector<AutotopyTriple> expected;
  for (int a = 0; a < n; ++a) {
    Perm l = q.L(a);
    expected.push_back({l.inverse(), q.U(a).inverse(), l});
  }
  std::sort(expected.begin(), expected.end());
  std::vector<AutotopyTriple> got = r.m.carrier;
  std::sort(got.begin(), got.end());
  if (!(got == expected)) throw CheckError("matp-carrier-mismatch", {{"size", got.size()}});
  for (const auto& t : r.m.carrier) r.to_loop.push_back(t.a3(0));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int b : r.to_loop) seen[static_cast<std::size_t>(b)] = 1;
  if (std::find(seen.begin(), seen.end(), 0) != seen.end() || r.to_loop[0] != 0)
    throw CheckError("matp-not-bijective", {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r.to_loop[static_cast<std::size_t>(r.m.loop.mul(i, j))] !=
          q.mul(r.to_loop[static_cast<std::size_t>(i)], r.to_loop[static_cast<std::size_t>(j)]))
        throw CheckError("matp-not-isomorphism", {{"i", i + 1}, {"j", j + 1}});
  auto z = s3_center_of(ctx);
  if (z.size() != 1 || !z[0].is_identity())
    throw CheckError("matp-center-nontrivial", {{"size", z.size()}});
  return r;
}

std::pair<AutotopyTriple, AutotopyTriple> decompose_autotopy(const FiniteLoop& q, const AutotopyTriple& t) {
  const int x = t.a2(0);
  AutotopyTriple r{q.R(x).inverse(), q.R(x), q.U(x).inverse()};
  AutotopyTriple d = t * r.inverse();
  if (!(d * r == t)) throw CheckError("decompose-recompose", {});
  if (d.a2(0) != 0) throw CheckError("decompose-middle", {{"image", d.a2(0) + 1}});
  if (!(d.a1 == d.a3)) throw CheckError("decompose-outer", {});
  Perm j = q.J();
  if (!(d.a2 * j == j * d.a2)) throw CheckError("decompose-j-commute", {});
  if (!is_autotopy(q, d, par::Exec::Serial)) throw CheckError("decompose-not-autotopy", {});
  return {std::move(d), std::move(r)};
}

EmbedResult embed_into_autotopy(const TrialityGroup& tg, const MLoopResult& ml, par::Exec exec) {
  const FiniteGroup& g = tg.g;
  const int n = g.order(), m = static_cast<int>(ml.carrier.size());
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < m; ++i) slot[static_cast<std::size_t>(ml.carrier[static_cast<std::size_t>(i)])] = i;
  auto conj_perm = [&](int left, int right) {
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      int e = g.mul(g.mul(left, ml.carrier[static_cast<std::size_t>(i)]), right);
      int s = slot[static_cast<std::size_t>(e)];
      if (s < 0) throw CheckError("embed-not-in-carrier", {{"element", e + 1}});
      img[static_cast<std::size_t>(i)] = s;
    }
    return Perm(img);
  };
  EmbedResult r;
  for (int x = 0; x < n; ++x) {
    int xr = tg.rho(x), xr2 = tg.rho(xr);
    AutotopyTriple t{conj_perm(g.inv(tg.sigma(xr2)), xr2), conj_perm(g.inv(x), tg.sigma(x)),
                     conj_perm(g.inv(xr), tg.sigma(xr))};
    if (!is_autotopy(ml.loop, t, par::Exec::Serial))
      throw CheckError("embed-not-autotopy", {{"x", x + 1}});
    r.image.push_back(std::move(t));
  }
  auto bad = par::first_violation(static_cast<std::int64_t>(n) * n, exec, [&](std::int64_t i) {
    int x = static_cast<int>(i / n), y = static_cast<int>(i % n);
    return r.image[static_cast<std::size_t>(g.mul(x, y))] ==
           r.image[static_cast<std::size_t>(x)] * r.image[static_cast<std::size_t>(y)];
  });
  if (bad) throw CheckError("embed-not-homomorphism", {{"pair", *bad}});
  for (int x = 0; x < n; ++x) {
    if (!(r.image[static_cast<std::size_t>(tg.rho(x))] == atp_rho(ml.loop, r.image[static_cast<std::size_t>(x)])))
      throw CheckError("embed-not-rho-equivariant", {{"x", x + 1}});
    if (!(r.image[static_cast<std::size_t>(tg.sigma(x))] == atp_sigma(ml.loop, r.image[static_cast<std::size_t>(x)])))
      throw CheckError("embed-not-sigma-equivariant", {{"x", x + 1}});
  }
  for (int x = 0; x < n; ++x)
    if (r.image[static_cast<std::size_t>(x)].is_identity()) r.kernel.push_back(x);
  if (r.kernel != s3_center(tg)) throw CheckError("embed-kernel-mismatch", {{"kernel", r.kernel.size()}});
  return r;
}

}  // namespace triality
