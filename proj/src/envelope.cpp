#include "triality/envelope.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

#include "triality/error.hpp"
#include "triality/subspace.hpp"

namespace triality {
namespace {

PBWElement elem(const PBWMono& m) { return PBWElement{{m, Rat(1)}}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// per-check state: U(g), the lifted triality maps and memoized P-values
struct Ctx {
  PBW u;
  LiftedMap rho, rho2, sigma, rho2sigma;

  explicit Ctx(const LieWithTriality& g)
      : u(g.bracket),
        rho(u, g.rho),
        rho2(u, g.rho * g.rho),
        sigma(u, g.sigma),
        rho2sigma(u, g.rho * g.rho * g.sigma) {}
  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;

  const PBWElement& p(const PBWMono& m) const {
    return memo(p_, m, [&] { return p_of(u, sigma, elem(m)); });
  }
  const PBWElement& rho_p(const PBWMono& m) const {
    return memo(rp_, m, [&] { return rho(p(m)); });
  }
  const PBWElement& rho2_p(const PBWMono& m) const {
    return memo(r2p_, m, [&] { return rho2(p(m)); });
  }

 private:
  mutable std::map<PBWMono, PBWElement> p_, rp_, r2p_;
  mutable std::mutex lock_;

  template <class F>
  const PBWElement& memo(std::map<PBWMono, PBWElement>& cache, const PBWMono& m, F&& make) const {
    {
      std::lock_guard<std::mutex> g(lock_);
      auto it = cache.find(m);
      if (it != cache.end()) return it->second;
    }
    PBWElement v = make();  // computed outside the lock; ties resolve on emplace
    std::lock_guard<std::mutex> g(lock_);
    return cache.emplace(m, std::move(v)).first->second;
  }
};

// coordinates over the union of supports, so span comparisons in a large
// degree slice only carry the monomials that actually occur
std::vector<QVec> compact_coords(const std::vector<const PBWElement*>& elems) {
  std::map<PBWMono, int> pos;
  for (const auto* e : elems)
    for (const auto& [m, c] : *e) pos.emplace(m, 0);
  int k = 0;
  for (auto& [m, i] : pos) i = k++;
  std::vector<QVec> out;
  out.reserve(elems.size());
  for (const auto* e : elems) {
    QVec v = zero_vec(static_cast<int>(pos.size()));
    for (const auto& [m, c] : *e) v[pos.at(m)] = c;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

PBWElement p_of(const PBW& u, const LiftedMap& sigma, const PBWElement& x) {
  PBWElement out;
  for (const auto& [split, c] : u.coproduct(x)) {
    PBWElement t = u.mul(sigma(elem(split.first)), u.antipode(elem(split.second)));
    for (const auto& [m, d] : t) add_to(out, m, c * d);
  }
  return out;
}

PBWElement star(const PBW& u, const LiftedMap& rho, const LiftedMap& rho2, const PBWElement& a,
                const PBWElement& b) {
  PBWElement out;
  for (const auto& [split, c] : u.coproduct(a)) {
    PBWElement t =
        u.mul(u.mul(rho2(u.antipode(elem(split.first))), b), rho(u.antipode(elem(split.second))));
    for (const auto& [m, d] : t) add_to(out, m, c * d);
  }
  return out;
}

PBWElement star_second(const PBW& u, const LiftedMap& rho, const LiftedMap& rho2, const PBWElement& a,
                       const PBWElement& b) {
  PBWElement out;
  for (const auto& [split, c] : u.coproduct(b)) {
    PBWElement t =
        u.mul(u.mul(rho(u.antipode(elem(split.first))), a), rho2(u.antipode(elem(split.second))));
    for (const auto& [m, d] : t) add_to(out, m, c * d);
  }
  return out;
}

std::vector<PBWElement> circle_words(const PBW& u, const std::vector<PBWElement>& gens, int maxlen,
                                     bool ordered_only) {
  std::vector<PBWElement> out{u.one()};
  std::vector<std::pair<int, PBWElement>> level{{0, u.one()}};  // (lowest admissible index, word)
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<std::pair<int, PBWElement>> next;
    for (const auto& [lo, x] : level)
      for (int j = ordered_only ? lo : 0; j < static_cast<int>(gens.size()); ++j)
        next.emplace_back(j, u.circle(gens[j], x));
    for (const auto& e : next) out.push_back(e.second);
    level = std::move(next);
  }
  return out;
}

SliceCheck check_ug_triality(const LieWithTriality& g, int degree, par::Exec exec) {
  auto t0 = std::chrono::steady_clock::now();
  Ctx c(g);
  auto monos = monomials_up_to(g.bracket.dim, degree);
  auto n = static_cast<std::int64_t>(monos.size());
  auto ok = [&](std::int64_t i) {
    const PBWMono& m = monos[i];
    PBWElement acc;
    for (const auto& [split, coeff] : c.u.coproduct3(elem(m))) {
      PBWElement t = c.u.mul(c.u.mul(c.p(split[0]), c.rho_p(split[1])), c.rho2_p(split[2]));
      for (const auto& [mm, d] : t) add_to(acc, mm, coeff * d);
    }
    return acc == (mono_degree(m) == 0 ? c.u.one() : PBWElement{});
  };
  SliceCheck out;
  out.checked = n;
  auto w = par::first_violation(n, exec, ok);
  out.pass = !w.has_value();
  if (w) out.witness = monos[*w];
  out.seconds = seconds_since(t0);
  return out;
}

ActionCheck check_action_identity(const LieWithTriality& g, int degree, par::Exec exec) {
  auto t0 = std::chrono::steady_clock::now();
  Ctx c(g);
  const int dim = g.bracket.dim;
  std::vector<QMatrix> ad;
  ad.reserve(dim);
  for (int i = 0; i < dim; ++i) ad.push_back(g.bracket.lmat(g.bracket.basis_vec(i)));

  // x·a = Σ x₁ a S(x₂) composes the adjoint maps, rightmost factor first
  std::map<PBWMono, QMatrix> acts;
  std::mutex acts_lock;
  auto act_mat = [&](const PBWMono& m) -> QMatrix {
    {
      std::lock_guard<std::mutex> lk(acts_lock);
      auto it = acts.find(m);
      if (it != acts.end()) return it->second;
    }
    QMatrix out = QMatrix::identity(dim);
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < m[i]; ++k) out = out * ad[i];
    std::lock_guard<std::mutex> lk(acts_lock);
    return acts.emplace(m, std::move(out)).first->second;
  };
  auto act = [&](const PBWElement& x, const QVec& v) {
    QVec out = zero_vec(dim);
    for (const auto& [m, cc] : x) {
      QVec w = act_mat(m).apply(v);
      for (int i = 0; i < dim; ++i) out[i] += cc * w[i];
    }
    return out;
  };

  const QMatrix rho2m = g.rho * g.rho;
  auto monos = monomials_up_to(dim, degree);
  auto n = static_cast<std::int64_t>(monos.size()) * dim;
  auto ok = [&](std::int64_t idx) {
    const PBWMono& x = monos[idx / dim];
    const int a = static_cast<int>(idx % dim);
    const QVec va = g.bracket.basis_vec(a);
    const QVec sa = g.sigma.apply(va);
    const QVec ra = g.rho.apply(va);
    const QVec rsa = g.rho.apply(sa);
    const QVec r2a = rho2m.apply(va);
    const QVec r2sa = rho2m.apply(sa);
    const Rat eps = mono_degree(x) == 0 ? 1 : 0;
    const PBWElement& px = c.p(x);
    const PBWElement r2spx = c.rho2sigma(px);
    const QVec t1 = act(px, sa), t2 = act(px, ra), t3 = act(r2spx, rsa), t4 = act(r2spx, r2a);
    for (int i = 0; i < dim; ++i)
      if (eps * va[i] - t1[i] + t2[i] - t3[i] + t4[i] - eps * r2sa[i] != 0) return false;
    return true;
  };
  ActionCheck out;
  out.checked = n;
  auto w = par::first_violation(n, exec, ok);
  out.pass = !w.has_value();
  if (w) out.witness = std::make_pair(monos[*w / dim], static_cast<int>(*w % dim));
  out.seconds = seconds_since(t0);
  return out;
}

bool p_span_check(const LieWithTriality& g, int degree) {
  Ctx c(g);
  const int dim = g.bracket.dim;
  MonoIndex idx(dim, degree);

  Subspace pspan(idx.size());
  for (const auto& m : idx.monos) pspan.insert(idx.coords(c.p(m)));

  const Subspace neg = kernel(g.sigma + QMatrix::identity(dim));
  std::vector<PBWElement> gens;
  for (const auto& v : neg.basis()) gens.push_back(c.u.from_coords(v));
  Subspace wspan(idx.size());
  for (const auto& w : circle_words(c.u, gens, degree, false)) wspan.insert(idx.coords(w));
  return pspan == wspan;
}

namespace {

// Ordered circle word with its coproduct resolved structurally: for primitive
// generators, Δ(a∘x) = Σ (a∘x₁)⊗x₂ + x₁⊗(a∘x₂), so a length-n word splits
// into 2ⁿ tensor terms whose components are again ordered circle words. The
// splits are stored as indices into the word list; ab carries
// (ρ²S(left), ρS(right)) and cd carries (ρS(left), ρ²S(right)), so both
// product expressions reduce to plain multiplications.
struct Word {
  PBWElement val;
  std::vector<int> letters;
  std::vector<std::pair<int, int>> splits;
  std::vector<std::pair<PBWElement, PBWElement>> ab, cd;
};

struct WordSet {
  std::vector<Word> words;
  std::map<std::vector<int>, int> index;

  const Word& at(int i) const { return words[i]; }
};

WordSet build_words(const Ctx& c, const std::vector<PBWElement>& gens, int maxlen) {
  WordSet ws;
  Word unit;
  unit.val = c.u.one();
  unit.splits.emplace_back(0, 0);
  ws.words.push_back(std::move(unit));
  ws.index.emplace(std::vector<int>{}, 0);
  std::size_t lo = 0, hi = 1;
  for (int len = 1; len <= maxlen; ++len) {
    for (std::size_t w = lo; w < hi; ++w)
      for (int j = ws.words[w].letters.empty() ? 0 : ws.words[w].letters.back();
           j < static_cast<int>(gens.size()); ++j) {
        const int self = static_cast<int>(ws.words.size());
        Word nw;
        nw.letters = ws.words[w].letters;
        nw.letters.push_back(j);
        nw.val = c.u.circle(gens[j], ws.words[w].val);
        ws.index.emplace(nw.letters, self);
        auto extended = [&](int part) {  // index of the word with letters(part)+j
          std::vector<int> ls = ws.words[part].letters;
          ls.push_back(j);
          return ws.index.at(ls);
        };
        for (const auto& [l, r] : ws.words[w].splits) {
          nw.splits.emplace_back(extended(l), r);
          nw.splits.emplace_back(l, extended(r));
        }
        ws.words.push_back(std::move(nw));
      }
    lo = hi;
    hi = ws.words.size();
  }
  for (auto& w : ws.words)
    for (const auto& [l, r] : w.splits) {
      w.ab.emplace_back(c.rho2(c.u.antipode(ws.words[l].val)), c.rho(c.u.antipode(ws.words[r].val)));
      w.cd.emplace_back(c.rho(c.u.antipode(ws.words[l].val)), c.rho2(c.u.antipode(ws.words[r].val)));
    }
  return ws;
}

// u*x = Σ ρ²(S(u₁)) x ρ(S(u₂)) with u a circle word
PBWElement star_left_word(const PBW& u, const Word& a, const PBWElement& x) {
  PBWElement out;
  for (const auto& [l, r] : a.ab)
    for (const auto& [m, d] : u.mul(u.mul(l, x), r)) add_to(out, m, d);
  return out;
}

// x*u = Σ ρ(S(u₁)) x ρ²(S(u₂)) with u a circle word
PBWElement star_right_word(const PBW& u, const PBWElement& x, const Word& b) {
  PBWElement out;
  for (const auto& [l, r] : b.cd)
    for (const auto& [m, d] : u.mul(u.mul(l, x), r)) add_to(out, m, d);
  return out;
}

}  // namespace

MHEnvelope mh_envelope(const LieOfMalcev& lm, int degree, par::Exec exec) {
  auto t0 = std::chrono::steady_clock::now();
  Ctx c(lm.lie);
  const PBW& u = c.u;
  const int nm = lm.malcev.dim;
  const int ldim = lm.lie.bracket.dim;

  std::vector<PBWElement> T(nm), lam(nm), rhoe(nm);
  for (int i = 0; i < nm; ++i) {
    T[i] = u.from_coords(lm.t_coords(i));
    lam[i] = u.gen(lm.ortho.lpart(i));
    rhoe[i] = u.gen(lm.ortho.rpart(i));
  }
  // T_a*v = ρ_a v + v λ_a and v*T_a = λ_a v + v ρ_a: the product expressions
  // collapse for a primitive operand since ρ(T_a) = −λ_a and ρ²(T_a) = −ρ_a
  auto star_t_left = [&](int i, const PBWElement& v) { return add(u.mul(rhoe[i], v), u.mul(v, lam[i])); };
  auto star_t_right = [&](const PBWElement& v, int i) { return add(u.mul(lam[i], v), u.mul(v, rhoe[i])); };

  WordSet ws = build_words(c, T, degree);
  std::vector<int> short_words, deg2_words, mh_u;
  for (int w = 0; w < static_cast<int>(ws.words.size()); ++w) {
    const auto len = static_cast<int>(ws.words[w].letters.size());
    if (len <= std::max(degree - 1, 1)) short_words.push_back(w);
    if (len <= std::min(degree, 2)) deg2_words.push_back(w);
    if (len == 1 || len == 2) mh_u.push_back(w);
  }

  MHEnvelope rep;
  rep.degree = degree;

  {  // T_a*T_b − T_b*T_a = −T_{[a,b]} on all unordered basis pairs
    IdentityCheck id{"t-commutator-bracket", true, nullptr};
    for (int i = 0; i < nm && id.pass; ++i)
      for (int j = i + 1; j < nm && id.pass; ++j) {
        PBWElement lhs = sub(star(u, c.rho, c.rho2, T[i], T[j]), star(u, c.rho, c.rho2, T[j], T[i]));
        const QVec br = lm.malcev.mul_basis(i, j);
        QVec coords = zero_vec(ldim);
        for (int k = 0; k < nm; ++k)
          if (br[k] != 0) {
            const QVec tk = lm.t_coords(k);
            for (int l = 0; l < ldim; ++l) coords[l] += br[k] * tk[l];
          }
        if (lhs != scale(u.from_coords(coords), -1)) {
          id.pass = false;
          id.witness = {{"a", i}, {"b", j}};
        }
      }
    rep.identities.push_back(id);
  }

  {  // both product expressions and the primitive shortcuts agree
    IdentityCheck id{"star-formulas-agree", true, nullptr};
    for (int i = 0; i < nm && id.pass; ++i)
      for (int w : deg2_words) {
        const PBWElement& x = ws.at(w).val;
        const PBWElement l1 = star(u, c.rho, c.rho2, T[i], x);
        if (l1 != star_second(u, c.rho, c.rho2, T[i], x) || l1 != star_t_left(i, x)) {
          id.pass = false;
          id.witness = {{"side", "left"}, {"a", i}, {"word", ws.at(w).letters}};
          break;
        }
        const PBWElement r1 = star(u, c.rho, c.rho2, x, T[i]);
        if (r1 != star_second(u, c.rho, c.rho2, x, T[i]) || r1 != star_t_right(x, i)) {
          id.pass = false;
          id.witness = {{"side", "right"}, {"a", i}, {"word", ws.at(w).letters}};
          break;
        }
      }
    rep.identities.push_back(id);
  }

  {  // T_a*u + u*T_a = T_a u + u T_a
    IdentityCheck id{"aux1-star-vs-product", true, nullptr};
    for (int i = 0; i < nm && id.pass; ++i)
      for (int w : short_words) {
        const PBWElement& x = ws.at(w).val;
        if (add(star(u, c.rho, c.rho2, T[i], x), star(u, c.rho, c.rho2, x, T[i])) != u.circle(T[i], x)) {
          id.pass = false;
          id.witness = {{"a", i}, {"word", ws.at(w).letters}};
          break;
        }
      }
    rep.identities.push_back(id);
  }

  {  // Σ u₁*(v*(u₂*w)) = Σ ((u₁*v)*u₂)*w over the structural splits of u
    IdentityCheck id{"left-moufang-hopf", true, nullptr};
    const auto n = static_cast<std::int64_t>(mh_u.size()) * nm * nm;
    auto ok = [&](std::int64_t t) {
      const Word& uw = ws.at(mh_u[t / (nm * nm)]);
      const int vi = static_cast<int>((t / nm) % nm);
      const int wi = static_cast<int>(t % nm);
      PBWElement lhs, rhs;
      for (std::size_t s = 0; s < uw.splits.size(); ++s) {
        const Word& u1 = ws.at(uw.splits[s].first);
        const Word& u2 = ws.at(uw.splits[s].second);
        const PBWElement inner = star_t_left(vi, star_t_right(u2.val, wi));
        for (const auto& [m, d] : star_left_word(u, u1, inner)) add_to(lhs, m, d);
        const PBWElement x = star_t_right(u1.val, vi);
        for (const auto& [m, d] : star_t_right(star_right_word(u, x, u2), wi)) add_to(rhs, m, d);
      }
      return lhs == rhs;
    };
    auto viol = par::first_violation(n, exec, ok);
    if (viol) {
      id.pass = false;
      id.witness = {{"word", ws.at(mh_u[*viol / (nm * nm)]).letters},
                    {"v", static_cast<int>((*viol / nm) % nm)},
                    {"w", static_cast<int>(*viol % nm)}};
    }
    rep.identities.push_back(id);
    rep.counts["moufang_instances"] = n;
  }

  {  // the ordered circle words of length ≤ d are linearly independent
    IdentityCheck id{"circle-word-independence", true, nullptr};
    std::vector<const PBWElement*> ptrs;
    for (const auto& w : ws.words) ptrs.push_back(&w.val);
    auto vecs = compact_coords(ptrs);
    Subspace span(static_cast<int>(vecs.empty() ? 0 : vecs[0].size()));
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (!span.insert(vecs[i])) {
        id.pass = false;
        id.witness = {{"word", ws.words[i].letters}};
        break;
      }
    rep.identities.push_back(id);
    rep.counts["ordered_words"] = ws.words.size();
  }

  {  // * closes on the span of circle words of length ≤ d
    IdentityCheck id{"mh-closure", true, nullptr};
    std::vector<PBWElement> all = circle_words(u, T, degree, false);
    std::vector<PBWElement> products;
    for (int i = 0; i < nm; ++i)
      for (int w : short_words) {
        products.push_back(star_t_left(i, ws.at(w).val));
        products.push_back(star_t_right(ws.at(w).val, i));
      }
    std::vector<const PBWElement*> ptrs;
    for (const auto& e : all) ptrs.push_back(&e);
    for (const auto& e : products) ptrs.push_back(&e);
    auto vecs = compact_coords(ptrs);
    Subspace span(static_cast<int>(vecs.empty() ? 0 : vecs[0].size()));
    for (std::size_t i = 0; i < all.size(); ++i) span.insert(vecs[i]);
    for (std::size_t i = 0; i < products.size(); ++i)
      if (!span.contains(vecs[all.size() + i])) {
        id.pass = false;
        id.witness = {{"product", static_cast<int>(i)}};
        break;
      }
    rep.identities.push_back(id);
    rep.counts["all_words"] = all.size();
    rep.counts["closure_products"] = products.size();
  }

  {  // * is not associative: a witness triple of generators must exist
    IdentityCheck id{"nonassociativity-witness", true, nullptr};
    bool found = false;
    for (int i = 0; i < nm && !found; ++i)
      for (int j = 0; j < nm && !found; ++j)
        for (int k = 0; k < nm && !found; ++k) {
          const PBWElement lhs = star_t_right(star_t_left(i, T[j]), k);
          const PBWElement rhs = star_t_left(i, star_t_left(j, T[k]));
          if (lhs != rhs) {
            found = true;
            id.witness = {{"a", i}, {"b", j}, {"c", k}};
          }
        }
    id.pass = found;
    rep.identities.push_back(id);
  }

  {  // (T_a,x,y) = −(x,T_a,y) = (x,y,T_a) with (p,q,r) = (p*q)*r − p*(q*r)
    IdentityCheck id{"alternative-nucleus", true, nullptr};
    const auto nd2 = static_cast<std::int64_t>(deg2_words.size());
    const auto n = static_cast<std::int64_t>(nm) * nd2 * nm;
    auto ok = [&](std::int64_t t) {
      const int ai = static_cast<int>(t / (nd2 * nm));
      const Word& xw = ws.at(deg2_words[(t / nm) % nd2]);
      const int yi = static_cast<int>(t % nm);
      const PBWElement& x = xw.val;
      const PBWElement axy =
          sub(star_t_right(star_t_left(ai, x), yi), star_t_left(ai, star_t_right(x, yi)));
      const PBWElement xay = sub(star_t_right(star_t_right(x, ai), yi),
                                 star_left_word(u, xw, star_t_left(ai, T[yi])));
      const PBWElement xya = sub(star_t_right(star_t_right(x, yi), ai),
                                 star_left_word(u, xw, star_t_left(yi, T[ai])));
      return axy == scale(xay, -1) && axy == xya;
    };
    auto viol = par::first_violation(n, exec, ok);
    if (viol) {
      id.pass = false;
      id.witness = {{"a", static_cast<int>(*viol / (nd2 * nm))},
                    {"word", ws.at(deg2_words[(*viol / nm) % nd2]).letters},
                    {"y", static_cast<int>(*viol % nm)}};
    }
    rep.identities.push_back(id);
    rep.counts["nucleus_triples"] = n;
  }

  rep.counts["malcev_dim"] = nm;
  rep.counts["lie_dim"] = ldim;
  rep.counts["bracket_pairs"] = nm * (nm - 1) / 2;
  rep.seconds = seconds_since(t0);
  return rep;
}

RelationCheck envelope_relations_witness(const LieOfMalcev& lm, const AlgebraSC& bracket, int degree,
                                         par::Exec exec) {
  auto t0 = std::chrono::steady_clock::now();
  Ctx c(lm.lie);
  const PBW& u = c.u;
  const int nm = lm.malcev.dim;
  const int ldim = lm.lie.bracket.dim;

  std::vector<PBWElement> T(nm), lam(nm), rhoe(nm);
  for (int i = 0; i < nm; ++i) {
    T[i] = u.from_coords(lm.t_coords(i));
    lam[i] = u.gen(lm.ortho.lpart(i));
    rhoe[i] = u.gen(lm.ortho.rpart(i));
  }
  // multiplication operators of the image of the Malcev algebra, a ↦ −T_a
  auto lop = [&](int i, const PBWElement& x) {
    return scale(add(u.mul(rhoe[i], x), u.mul(x, lam[i])), -1);
  };
  auto rop = [&](int i, const PBWElement& x) {
    return scale(add(u.mul(lam[i], x), u.mul(x, rhoe[i])), -1);
  };
  auto embed = [&](const QVec& v7, bool left) {  // λ or ρ at a Malcev vector
    QVec cc = zero_vec(ldim);
    for (int k = 0; k < nm; ++k) cc[left ? lm.ortho.lpart(k) : lm.ortho.rpart(k)] = v7[k];
    return u.from_coords(cc);
  };
  auto lvec = [&](const QVec& v7, const PBWElement& x) {
    return scale(add(u.mul(embed(v7, false), x), u.mul(x, embed(v7, true))), -1);
  };
  auto rvec = [&](const QVec& v7, const PBWElement& x) {
    return scale(add(u.mul(embed(v7, true), x), u.mul(x, embed(v7, false))), -1);
  };

  const std::vector<PBWElement> words = circle_words(u, T, degree, true);
  const auto nw = static_cast<std::int64_t>(words.size());

  RelationCheck out;
  std::mutex wit_lock;
  const auto n = static_cast<std::int64_t>(nm) * nm * nw;
  auto ok = [&](std::int64_t t) {
    const int i = static_cast<int>(t / (nm * nw));
    const int j = static_cast<int>((t / nw) % nm);
    const PBWElement& x = words[t % nw];
    const QVec br = bracket.mul_basis(i, j);

    const PBWElement com_lr = sub(lop(i, rop(j, x)), rop(j, lop(i, x)));
    const char* family = nullptr;
    if (sub(lop(i, lop(j, x)), lop(j, lop(i, x))) != sub(lvec(br, x), scale(com_lr, 2)))
      family = "LL";
    else if (sub(rop(i, rop(j, x)), rop(j, rop(i, x))) !=
             sub(scale(rvec(br, x), -1), scale(com_lr, 2)))
      family = "RR";
    else if (com_lr != sub(rop(i, lop(j, x)), lop(j, rop(i, x))))
      family = "LR";
    if (family) {
      std::lock_guard<std::mutex> lk(wit_lock);
      if (out.witness.is_null() || out.witness["index"].get<std::int64_t>() > t)
        out.witness = {{"family", family}, {"a", i}, {"b", j}, {"word", static_cast<int>(t % nw)}, {"index", t}};
      return false;
    }
    return true;
  };
  out.pass = !par::first_violation(n, exec, ok).has_value();
  if (out.pass) out.witness = nullptr;
  out.seconds = seconds_since(t0);
  return out;
}

bool check_envelope_relations(const LieOfMalcev& lm, par::Exec exec) {
  return envelope_relations_witness(lm, lm.malcev, 2, exec).pass;
}

nlohmann::json MHEnvelope::to_json() const {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& e : identities) ids.push_back({{"name", e.name}, {"pass", e.pass}, {"witness", e.witness}});
  return {{"check", "mh-envelope"},
          {"status", pass() ? "pass" : "fail"},
          {"degree", degree},
          {"identities", ids},
          {"counts", counts},
          {"seconds", seconds}};
}

}  // namespace triality
