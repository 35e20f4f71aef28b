#include "triality/pbw.hpp"

#include <algorithm>
#include <functional>

namespace triality {

int mono_degree(const PBWMono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

int element_degree(const PBWElement& u) {
  int d = 0;
  for (const auto& [m, c] : u) d = std::max(d, mono_degree(m));
  return d;
}

void add_to(PBWElement& acc, const PBWMono& m, const Rat& c) {
  if (c == 0) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) acc.erase(it);
}

PBWElement add(const PBWElement& a, const PBWElement& b) {
  PBWElement r = a;
  for (const auto& [m, c] : b) add_to(r, m, c);
  return r;
}

PBWElement sub(const PBWElement& a, const PBWElement& b) {
  PBWElement r = a;
  for (const auto& [m, c] : b) add_to(r, m, -c);
  return r;
}

PBWElement scale(const PBWElement& a, const Rat& c) {
  PBWElement r;
  if (c == 0) return r;
  for (const auto& [m, v] : a) r.emplace(m, v * c);
  return r;
}

PBW::PBW(AlgebraSC bracket) : br_(std::move(bracket)) {
  if (!br_.is_anticommutative()) throw CheckError("pbw-bracket-not-anticommutative", {});
}

PBWElement PBW::one() const {
  PBWElement r;
  r.emplace(PBWMono(static_cast<std::size_t>(dim()), 0), Rat(1));
  return r;
}

PBWElement PBW::gen(int i) const {
  PBWMono m(static_cast<std::size_t>(dim()), 0);
  m[static_cast<std::size_t>(i)] = 1;
  PBWElement r;
  r.emplace(std::move(m), Rat(1));
  return r;
}

PBWElement PBW::from_coords(const QVec& v) const {
  PBWElement r;
  for (int i = 0; i < dim(); ++i) {
    if (v[static_cast<std::size_t>(i)] == 0) continue;
    PBWMono m(static_cast<std::size_t>(dim()), 0);
    m[static_cast<std::size_t>(i)] = 1;
    r.emplace(std::move(m), v[static_cast<std::size_t>(i)]);
  }
  return r;
}

// m·xⱼ in normal form. If every factor index of m is ≤ j the product is
// already sorted; otherwise split off the top factor x_k and use
// m·xⱼ = (m′·xⱼ)·x_k + m′·[x_k,xⱼ]. Each recursive branch either lowers the
// degree or terminates in the sorted case, and everything lands in the cache.
PBWElement PBW::mul_mono_gen(const PBWMono& m, int j) const {
  const std::pair<PBWMono, int> key{m, j};
  {
    std::lock_guard<std::mutex> g(lock_);
    auto it = right_gen_.find(key);
    if (it != right_gen_.end()) return it->second;
  }
  int k = -1;
  for (int i = dim() - 1; i >= 0; --i)
    if (m[static_cast<std::size_t>(i)] != 0) {
      k = i;
      break;
    }
  PBWElement out;
  if (k <= j) {
    PBWMono t = m;
    ++t[static_cast<std::size_t>(j)];
    out.emplace(std::move(t), Rat(1));
  } else {
    PBWMono head = m;
    --head[static_cast<std::size_t>(k)];
    for (const auto& [t, c] : mul_mono_gen(head, j))
      for (const auto& [s, d] : mul_mono_gen(t, k)) add_to(out, s, c * d);
    const QVec& br = br_.mul_basis(k, j);
    for (int l = 0; l < dim(); ++l)
      if (br[static_cast<std::size_t>(l)] != 0)
        for (const auto& [s, d] : mul_mono_gen(head, l)) add_to(out, s, br[static_cast<std::size_t>(l)] * d);
  }
  std::lock_guard<std::mutex> g(lock_);
  return right_gen_.emplace(key, std::move(out)).first->second;
}

PBWElement PBW::mul_elem_gen(const PBWElement& u, int j) const {
  PBWElement out;
  for (const auto& [m, c] : u)
    for (const auto& [s, d] : mul_mono_gen(m, j)) add_to(out, s, c * d);
  return out;
}

PBWElement PBW::mul_mono(const PBWMono& a, const PBWMono& b) const {
  PBWElement acc;
  acc.emplace(a, Rat(1));
  for (int j = 0; j < dim(); ++j)
    for (int t = 0; t < b[static_cast<std::size_t>(j)]; ++t) acc = mul_elem_gen(acc, j);
  return acc;
}

PBWElement PBW::mul(const PBWElement& a, const PBWElement& b) const {
  PBWElement out;
  for (const auto& [mb, cb] : b) {
    PBWElement part;
    for (const auto& [ma, ca] : a)
      for (const auto& [s, d] : mul_mono(ma, mb)) add_to(part, s, ca * d);
    for (const auto& [s, d] : part) add_to(out, s, d * cb);
  }
  return out;
}

namespace {

Rat binom(int n, int k) {
  Rat r(1);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TensorElement PBW::coproduct(const PBWElement& u) const {
  TensorElement out;
  const std::size_t d = static_cast<std::size_t>(dim());
  for (const auto& [m, c] : u) {
    std::vector<std::pair<std::pair<PBWMono, PBWMono>, Rat>> terms;
    terms.push_back({{PBWMono(d, 0), PBWMono(d, 0)}, c});
    for (std::size_t i = 0; i < d; ++i) {
      int e = m[i];
      if (e == 0) continue;
      std::vector<std::pair<std::pair<PBWMono, PBWMono>, Rat>> next;
      for (const auto& [mm, cc] : terms)
        for (int s = 0; s <= e; ++s) {
          auto t = mm;
          t.first[i] = static_cast<std::uint8_t>(s);
          t.second[i] = static_cast<std::uint8_t>(e - s);
          next.push_back({std::move(t), cc * binom(e, s)});
        }
      terms = std::move(next);
    }
    for (auto& [t, cc] : terms) {
      auto it = out.find(t);
      if (it == out.end())
        out.emplace(std::move(t), std::move(cc));
      else {
        it->second += cc;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

Tensor3Element PBW::coproduct3(const PBWElement& u) const {
  Tensor3Element out;
  const std::size_t d = static_cast<std::size_t>(dim());
  for (const auto& [m, c] : u) {
    std::vector<std::pair<std::array<PBWMono, 3>, Rat>> terms;
    terms.push_back({{PBWMono(d, 0), PBWMono(d, 0), PBWMono(d, 0)}, c});
    for (std::size_t i = 0; i < d; ++i) {
      int e = m[i];
      if (e == 0) continue;
      std::vector<std::pair<std::array<PBWMono, 3>, Rat>> next;
      for (const auto& [mm, cc] : terms)
        for (int r = 0; r <= e; ++r)
          for (int s = 0; s <= e - r; ++s) {
            auto t = mm;
            t[0][i] = static_cast<std::uint8_t>(r);
            t[1][i] = static_cast<std::uint8_t>(s);
            t[2][i] = static_cast<std::uint8_t>(e - r - s);
            next.push_back({std::move(t), cc * binom(e, r) * binom(e - r, s)});
          }
      terms = std::move(next);
    }
    for (auto& [t, cc] : terms) {
      auto it = out.find(t);
      if (it == out.end())
        out.emplace(std::move(t), std::move(cc));
      else {
        it->second += cc;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

// S(x_{i₁}⋯x_{iₙ}) = (−1)ⁿ x_{iₙ}⋯x_{i₁}: rebuild the monomial with its
// factors right-multiplied in decreasing index order
PBWElement PBW::antipode(const PBWElement& u) const {
  PBWElement out;
  for (const auto& [m, c] : u) {
    PBWElement img;
    bool hit = false;
    {
      std::lock_guard<std::mutex> g(lock_);
      auto it = antipode_.find(m);
      if (it != antipode_.end()) {
        img = it->second;
        hit = true;
      }
    }
    if (!hit) {
      img = one();
      for (int i = dim() - 1; i >= 0; --i)
        for (int t = 0; t < m[static_cast<std::size_t>(i)]; ++t) img = mul_elem_gen(img, i);
      if (mono_degree(m) % 2 == 1) img = scale(img, Rat(-1));
      std::lock_guard<std::mutex> g(lock_);
      antipode_.emplace(m, img);
    }
    for (const auto& [s, d] : img) add_to(out, s, c * d);
  }
  return out;
}

Rat PBW::counit(const PBWElement& u) const {
  auto it = u.find(PBWMono(static_cast<std::size_t>(dim()), 0));
  return it == u.end() ? Rat(0) : it->second;
}

PBWElement PBW::circle(const PBWElement& a, const PBWElement& x) const { return add(mul(a, x), mul(x, a)); }

LiftedMap::LiftedMap(const PBW& u, QMatrix m) : u_(&u), m_(std::move(m)) {
  if (!is_bracket_automorphism(u.bracket(), m_)) throw CheckError("lift-not-bracket-automorphism", {});
}

PBWElement LiftedMap::operator()(const PBWElement& x) const {
  PBWElement out;
  for (const auto& [m, c] : x) {
    PBWElement img;
    bool hit = false;
    {
      std::lock_guard<std::mutex> g(lock_);
      auto it = cache_.find(m);
      if (it != cache_.end()) {
        img = it->second;
        hit = true;
      }
    }
    if (!hit) {
      img = u_->one();
      for (int i = 0; i < u_->dim(); ++i) {
        if (m[static_cast<std::size_t>(i)] == 0) continue;
        QVec col(static_cast<std::size_t>(u_->dim()));
        for (int r = 0; r < u_->dim(); ++r) col[static_cast<std::size_t>(r)] = m_.at(r, i);
        PBWElement image = u_->from_coords(col);
        for (int t = 0; t < m[static_cast<std::size_t>(i)]; ++t) img = u_->mul(img, image);
      }
      std::lock_guard<std::mutex> g(lock_);
      cache_.emplace(m, img);
    }
    for (const auto& [s, d] : img) add_to(out, s, c * d);
  }
  return out;
}

LiftedMap lift_auto(const PBW& u, QMatrix m) { return LiftedMap(u, std::move(m)); }

std::vector<PBWMono> monomials_up_to(int dim, int maxdeg) {
  std::vector<PBWMono> out;
  PBWMono cur(static_cast<std::size_t>(dim), 0);
  for (int deg = 0; deg <= maxdeg; ++deg) {
    // lexicographic within the degree, first index most significant
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == dim - 1) {
        cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(left);
        out.push_back(cur);
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
        rec(i + 1, left - e);
      }
    };
    if (dim == 0) {
      if (deg == 0) out.push_back(cur);
      continue;
    }
    rec(0, deg);
  }
  return out;
}

MonoIndex::MonoIndex(int dim, int maxdeg) : monos(monomials_up_to(dim, maxdeg)) {
  for (std::size_t i = 0; i < monos.size(); ++i) pos.emplace(monos[i], static_cast<int>(i));
}

QVec MonoIndex::coords(const PBWElement& u) const {
  QVec v(monos.size());
  for (const auto& [m, c] : u) {
    auto it = pos.find(m);
    if (it == pos.end()) throw CheckError("monomial-outside-slice", {{"degree", mono_degree(m)}});
    v[static_cast<std::size_t>(it->second)] = c;
  }
  return v;
}

}  // namespace triality
