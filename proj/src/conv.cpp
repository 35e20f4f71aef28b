#include "triality/conv.hpp"

#include <algorithm>
#include <numeric>

namespace triality {

namespace {

Perm random_perm(int n, par::Rng& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(v[static_cast<std::size_t>(i)], v[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return Perm(std::move(v));
}

PermOp random_pm(int points, int n, par::Rng& rng) {
  PermOp r;
  for (int p = 0; p < points; ++p) r.at.push_back(random_perm(n, rng));
  return r;
}

// digits of a morphism index, least-significant point first
std::vector<int> decode_morphism(std::int64_t f, int points, int n) {
  std::vector<int> d(static_cast<std::size_t>(points));
  for (int p = 0; p < points; ++p) {
    d[static_cast<std::size_t>(p)] = static_cast<int>(f % n);
    f /= n;
  }
  return d;
}

}  // namespace

ConvOperator conv_identity(int points, int dim) {
  ConvOperator r;
  r.at.assign(static_cast<std::size_t>(points), QMatrix::identity(dim));
  return r;
}

ConvOperator conv_mul(const ConvOperator& a, const ConvOperator& b) {
  if (a.at.size() != b.at.size()) throw CheckError("conv-point-mismatch", {});
  ConvOperator r;
  r.at.reserve(a.at.size());
  for (std::size_t p = 0; p < a.at.size(); ++p) r.at.push_back(b.at[p] * a.at[p]);
  return r;
}

PermOp pm_identity(int points, int n) {
  PermOp r;
  r.at.assign(static_cast<std::size_t>(points), Perm::identity(n));
  return r;
}

PermOp pm_mul(const PermOp& a, const PermOp& b) {
  if (a.at.size() != b.at.size()) throw CheckError("conv-point-mismatch", {});
  PermOp r;
  r.at.reserve(a.at.size());
  for (std::size_t p = 0; p < a.at.size(); ++p) r.at.push_back(a.at[p] * b.at[p]);
  return r;
}

PermOp pm_inv(const PermOp& a) {
  PermOp r;
  r.at.reserve(a.at.size());
  for (const auto& p : a.at) r.at.push_back(p.inverse());
  return r;
}

PermOp pm_s(const FiniteLoop& q, const PermOp& a) {
  Perm j = q.J();
  PermOp r;
  r.at.reserve(a.at.size());
  for (const auto& p : a.at) r.at.push_back(j * p * j);
  return r;
}

ConvOperator perms_to_conv(const PermOp& a, int dim) {
  ConvOperator r;
  for (const auto& p : a.at) {
    QMatrix m(dim, dim);
    for (int g = 0; g < dim; ++g) m.at(p(g), g) = 1;
    r.at.push_back(std::move(m));
  }
  return r;
}

GMember g_membership(const FiniteLoop& q, const ConvOperator& a) {
  const int n = q.order();
  GMember r;
  for (std::size_t p = 0; p < a.at.size(); ++p) {
    const QMatrix& m = a.at[p];
    if (m.rows() != n || m.cols() != n)
      throw CheckError("bad-operator-shape", {{"point", p}, {"rows", m.rows()}, {"cols", m.cols()}});
    std::vector<int> images(static_cast<std::size_t>(n), -1);
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int g = 0; g < n; ++g) {
      Rat sum = 0;
      int nonzero = -1, extra = 0;
      for (int k = 0; k < n; ++k) {
        const Rat& e = m.at(k, g);
        if (e == 0) continue;
        sum += e;
        if (nonzero < 0)
          nonzero = k;
        else
          ++extra;
      }
      if (sum != 1) {  // ε(yA_x) = ε(y)ε(x)
        r.witness = {{"point", p}, {"basis", g + 1}, {"condition", 2}};
        return r;
      }
      // Δ(yA_x) = Σ y₁A_{x₁} ⊗ y₂A_{x₂}: the image must be group-like again
      if (extra > 0 || m.at(nonzero, g) != 1) {
        r.witness = {{"point", p}, {"basis", g + 1}, {"condition", 3}};
        return r;
      }
      images[static_cast<std::size_t>(g)] = nonzero;
      hit[static_cast<std::size_t>(nonzero)] = 1;
    }
    for (int k = 0; k < n; ++k)  // invertibility
      if (!hit[static_cast<std::size_t>(k)]) {
        r.witness = {{"point", p}, {"basis", k + 1}, {"condition", 1}};
        return r;
      }
    r.perms.at.emplace_back(std::move(images));
  }
  r.pass = true;
  return r;
}

LiftedOps lifted_ops(const FiniteLoop& q, const PermOp& a) {
  LiftedOps ops{PermOp{}, PermOp{}, PermOp{}, pm_s(q, a)};
  for (const auto& p : a.at) {
    int u = p(q.unit());  // 1·A_c
    ops.l.at.push_back(q.L(u));
    ops.r.at.push_back(q.R(u));
    ops.u.at.push_back(q.U(u));
    // (L_A)⁻¹ = (L⁻¹)_A with L⁻¹: x ↦ L_{xS}, and likewise for R, U
    int s = q.inv(u);
    if (q.L(u).inverse() != q.L(s) || q.R(u).inverse() != q.R(s) || q.U(u).inverse() != q.U(s))
      throw CheckError("lift-inverse", {{"element", u + 1}});
  }
  return ops;
}

ConvTriple conv_rho(const FiniteLoop& q, const ConvTriple& t) {
  return {pm_s(q, t.b), t.c, pm_s(q, t.a)};
}

ConvTriple conv_sigma(const FiniteLoop& q, const ConvTriple& t) {
  return {t.c, pm_s(q, t.b), t.a};
}

std::optional<std::array<int, 3>> atpc_witness(const FiniteLoop& q, const ConvTriple& t, par::Exec exec) {
  const std::int64_t n = q.order(), pts = static_cast<std::int64_t>(t.a.at.size());
  auto hit = par::first_violation(pts * n * n, exec, [&](std::int64_t i) {
    int p = static_cast<int>(i / (n * n)), x = static_cast<int>((i / n) % n), y = static_cast<int>(i % n);
    return t.a.at[static_cast<std::size_t>(p)](q.mul(x, y)) ==
           q.mul(t.b.at[static_cast<std::size_t>(p)](x), t.c.at[static_cast<std::size_t>(p)](y));
  });
  if (!hit) return std::nullopt;
  return std::array<int, 3>{static_cast<int>(*hit / (n * n)), static_cast<int>((*hit / n) % n),
                            static_cast<int>(*hit % n)};
}

bool atpc_membership(const FiniteLoop& q, const ConvTriple& t, par::Exec exec) {
  return !atpc_witness(q, t, exec).has_value();
}

FiniteLoop convolution_loop(int points, const FiniteLoop& q, par::Exec exec) {
  const int n = q.order();
  std::int64_t order = 1;
  for (int p = 0; p < points; ++p) {
    order *= n;
    if (order > 1024) throw CheckError("conv-loop-too-big", {{"points", points}, {"loop", n}});
  }
  const int m = static_cast<int>(order);
  std::vector<int> tab(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    auto f = decode_morphism(i, points, n);
    for (int j = 0; j < m; ++j) {
      auto g = decode_morphism(j, points, n);
      std::int64_t enc = 0;
      for (int p = points - 1; p >= 0; --p)
        enc = enc * n + q.mul(f[static_cast<std::size_t>(p)], g[static_cast<std::size_t>(p)]);
      tab[static_cast<std::size_t>(i) * m + j] = static_cast<int>(enc);
    }
  }
  FiniteLoop conv = FiniteLoop::from_table(m, std::move(tab));
  auto rep = check_moufang(conv, exec);
  if (!rep.pass()) throw CheckError("conv-not-moufang", rep.to_json());
  return conv;
}

LoopReport conv_algebra_report(int points, const FiniteLoop& q, int samples, std::uint64_t seed) {
  const int n = q.order();
  par::Rng rng(seed);
  auto random_op = [&] {
    ConvOperator a;
    for (int p = 0; p < points; ++p) {
      QMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rat(static_cast<int>(rng.below(7)) - 3);
      a.at.push_back(std::move(m));
    }
    return a;
  };

  LoopReport rep;
  rep.check = "conv-algebra";
  rep.counts = {{"points", points}, {"dim", n}, {"samples", samples}};
  const ConvOperator id = conv_identity(points, n);
  nlohmann::json unit_w, assoc_w;
  bool unit_ok = true, assoc_ok = true;
  for (int s = 0; s < samples && (unit_ok || assoc_ok); ++s) {
    ConvOperator a = random_op(), b = random_op(), c = random_op();
    if (unit_ok && !(conv_mul(a, id) == a && conv_mul(id, a) == a)) {
      unit_ok = false;
      unit_w = {{"sample", s}};
    }
    if (assoc_ok && !(conv_mul(conv_mul(a, b), c) == conv_mul(a, conv_mul(b, c)))) {
      assoc_ok = false;
      assoc_w = {{"sample", s}};
    }
  }
  rep.identities.push_back({"identity-laws", unit_ok, unit_w});
  rep.identities.push_back({"associativity", assoc_ok, assoc_w});
  return rep;
}

LoopReport atpc_triality_checks(int points, const FiniteLoop& q, int samples, std::uint64_t seed,
                                par::Exec exec) {
  const int n = q.order();
  par::Rng rng(seed);

  // canonical member triples of a lifted operator
  auto canonical = [&](const LiftedOps& o, int k) -> ConvTriple {
    if (k == 0) return {o.l, o.u, pm_inv(o.l)};
    if (k == 1) return {o.r, pm_inv(o.r), o.u};
    return {o.u, o.l, o.r};
  };

  LoopReport rep;
  rep.check = "atpc-triality";

  std::vector<ConvTriple> pool;
  nlohmann::json canon_w, prod_w;
  bool canon_ok = true, prod_ok = true;
  {
    std::vector<PermOp> bs{pm_identity(points, n)};
    int nb = std::max(2, std::min(samples, 64));
    for (int i = 0; i < nb; ++i) bs.push_back(random_pm(points, n, rng));
    std::vector<ConvTriple> canon;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      auto ops = lifted_ops(q, bs[i]);
      for (int k = 0; k < 3; ++k) {
        ConvTriple t = canonical(ops, k);
        if (canon_ok && !atpc_membership(q, t, exec)) {
          canon_ok = false;
          canon_w = {{"operator", i}, {"triple", k}};
        }
        canon.push_back(std::move(t));
      }
    }
    pool = canon;
    while (static_cast<int>(pool.size()) < samples) {
      const ConvTriple& x = canon[rng.below(canon.size())];
      const ConvTriple& y = canon[rng.below(canon.size())];
      ConvTriple t = x * y;
      if (prod_ok && !atpc_membership(q, t, exec)) {
        prod_ok = false;
        prod_w = {{"sample", pool.size()}};
      }
      pool.push_back(std::move(t));
    }
  }
  rep.identities.push_back({"canonical-membership", canon_ok, canon_w});
  rep.identities.push_back({"product-membership", prod_ok, prod_w});

  auto scan_pool = [&](const char* name, auto&& ok) {
    nlohmann::json w;
    bool pass = true;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!ok(pool[i])) {
        pass = false;
        w = {{"sample", i}};
        break;
      }
    rep.identities.push_back({name, pass, std::move(w)});
  };

  scan_pool("rho-sigma-membership", [&](const ConvTriple& t) {
    return atpc_membership(q, conv_rho(q, t), exec) && atpc_membership(q, conv_sigma(q, t), exec);
  });
  scan_pool("s3-relations", [&](const ConvTriple& t) {
    auto r3 = conv_rho(q, conv_rho(q, conv_rho(q, t)));
    auto s2 = conv_sigma(q, conv_sigma(q, t));
    auto sr = conv_rho(q, conv_sigma(q, t));                          // t^σ then ρ
    auto rrs = conv_sigma(q, conv_rho(q, conv_rho(q, t)));            // t^{ρ²} then σ
    return r3 == t && s2 == t && sr == rrs;
  });
  scan_pool("triality-equalities", [&](const ConvTriple& t) {
    const PermOp &A = t.a, &B = t.b, &C = t.c;
    PermOp sA = pm_s(q, A), sB = pm_s(q, B), sC = pm_s(q, C);
    PermOp one = pm_identity(points, n);
    auto chain = [&](std::initializer_list<const PermOp*> fs) {
      PermOp acc = one;
      for (const PermOp* f : fs) acc = pm_mul(acc, *f);
      return acc;
    };
    PermOp iA = pm_inv(A), iB = pm_inv(B), iC = pm_inv(C);
    PermOp isB = pm_inv(sB), isC = pm_inv(sC), isA = pm_inv(sA);
    return chain({&iA, &C, &isB, &B, &isC, &sA}) == one &&
           chain({&iB, &sB, &iC, &A, &isA, &sC}) == one &&
           chain({&iC, &A, &isA, &sC, &iB, &sB}) == one;
  });
  scan_pool("middle-hopf", [&](const ConvTriple& t) {
    auto rc = lifted_ops(q, t.c).r;
    auto lb = lifted_ops(q, t.b).l;
    return t.a == pm_mul(t.b, rc) && t.a == pm_mul(t.c, lb);
  });

  bool decomp_ok = true, dsym_ok = true;
  nlohmann::json decomp_w, dsym_w;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const ConvTriple& t = pool[i];
    auto ops_b = lifted_ops(q, t.b);
    PermOp dp = pm_mul(t.a, ops_b.r);          // D′ = A*R_B
    PermOp d = pm_mul(t.b, pm_inv(ops_b.r));   // D = B*R_B⁻¹
    ConvTriple dd{dp, d, dp};
    bool ok = dp == pm_mul(t.c, ops_b.u) && atpc_membership(q, dd, exec) &&
              pm_mul(dp, pm_inv(ops_b.r)) == t.a && pm_mul(d, ops_b.r) == t.b &&
              pm_mul(dp, pm_inv(ops_b.u)) == t.c;
    if (decomp_ok && !ok) {
      decomp_ok = false;
      decomp_w = {{"sample", i}};
    }
    if (dsym_ok && !(pm_s(q, d) == d)) {
      dsym_ok = false;
      dsym_w = {{"sample", i}};
    }
  }
  rep.identities.push_back({"decomposition", decomp_ok, decomp_w});
  rep.identities.push_back({"decomposition-symmetric", dsym_ok, dsym_w});

  // the M-product of (L_B⁻¹, U_B⁻¹, L_B) triples against L_B·L_{B′} = L_{L_B*R_{B′}}
  auto m_triple = [&](const PermOp& l, const PermOp& u) -> ConvTriple {
    return {pm_inv(l), pm_inv(u), l};
  };
  auto m_product = [&](const ConvTriple& m1, const ConvTriple& m2) {
    ConvTriple mi = m1.inverse();
    return conv_rho(q, mi) * m2 * conv_rho(q, conv_rho(q, mi));
  };
  {
    bool ok = true;
    nlohmann::json w;
    for (int s = 0; s < std::max(8, samples / 4) && ok; ++s) {
      PermOp b1 = random_pm(points, n, rng), b2 = random_pm(points, n, rng);
      auto o1 = lifted_ops(q, b1), o2 = lifted_ops(q, b2);
      PermOp b12 = pm_mul(o1.l, o2.r);  // L_B*R_{B′}
      auto o12 = lifted_ops(q, b12);
      if (!(m_product(m_triple(o1.l, o1.u), m_triple(o2.l, o2.u)) == m_triple(o12.l, o12.u))) {
        ok = false;
        w = {{"sample", s}};
      }
    }
    rep.identities.push_back({"product-formula", ok, std::move(w)});
  }

  // θ ↦ L_θ carries convolution of morphisms to the M-product, exhaustively
  // when Q^points is small
  std::int64_t nmor = 1;
  for (int p = 0; p < points; ++p) nmor *= n;
  {
    bool ok = true;
    nlohmann::json w;
    auto theta_triple = [&](const std::vector<int>& f) {
      PermOp l, u;
      for (int p = 0; p < points; ++p) {
        l.at.push_back(q.L(f[static_cast<std::size_t>(p)]));
        u.at.push_back(q.U(f[static_cast<std::size_t>(p)]));
      }
      return m_triple(l, u);
    };
    const bool exhaustive = nmor <= 256;
    const std::int64_t npairs = exhaustive ? nmor * nmor : samples;
    for (std::int64_t k = 0; k < npairs && ok; ++k) {
      std::int64_t i = exhaustive ? k / nmor : static_cast<std::int64_t>(rng.below(nmor));
      std::int64_t j = exhaustive ? k % nmor : static_cast<std::int64_t>(rng.below(nmor));
      auto f = decode_morphism(i, points, n), g = decode_morphism(j, points, n);
      std::vector<int> fg(static_cast<std::size_t>(points));
      for (int p = 0; p < points; ++p)
        fg[static_cast<std::size_t>(p)] = q.mul(f[static_cast<std::size_t>(p)], g[static_cast<std::size_t>(p)]);
      if (!(m_product(theta_triple(f), theta_triple(g)) == theta_triple(fg))) {
        ok = false;
        w = {{"i", i}, {"j", j}};
      }
    }
    rep.identities.push_back({"morphism-bijection", ok, std::move(w)});
    rep.counts = {{"points", points},     {"loop", n},          {"samples", static_cast<int>(pool.size())},
                  {"morphisms", nmor},    {"pairs", npairs},    {"exhaustive", exhaustive}};
  }
  return rep;
}

}  // namespace triality
