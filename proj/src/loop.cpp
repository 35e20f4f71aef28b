#include "triality/loop.hpp"

#include <algorithm>
#include <functional>
#include <array>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace triality {

FiniteLoop FiniteLoop::from_table(int n, std::vector<int> table0) {
  if (n < 1) throw CheckError("bad-order", {{"order", n}});
  if (static_cast<int>(table0.size()) != n * n) throw CheckError("bad-shape", {{"expected", n * n}, {"got", table0.size()}});
  for (int v : table0)
    if (v < 0 || v >= n) throw CheckError("bad-entry", {{"value", v + 1}, {"order", n}});
  for (int r = 0; r < n; ++r) {
    std::vector<char> seen(n, 0);
    for (int c = 0; c < n; ++c) {
      int v = table0[static_cast<std::size_t>(r) * n + c];
      if (seen[v]) throw CheckError("not-latin-square", {{"row", r + 1}, {"value", v + 1}});
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<char> seen(n, 0);
    for (int r = 0; r < n; ++r) {
      int v = table0[static_cast<std::size_t>(r) * n + c];
      if (seen[v]) throw CheckError("not-latin-square", {{"col", c + 1}, {"value", v + 1}});
      seen[v] = 1;
    }
  }
  int unit = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table0[static_cast<std::size_t>(e) * n + x] == x && table0[static_cast<std::size_t>(x) * n + e] == x;
    if (ok) {
      unit = e;
      break;
    }
  }
  if (unit < 0) throw CheckError("no-unit", nlohmann::json::object());
  if (unit != 0) throw CheckError("unit-not-first", {{"unit", unit + 1}});

  FiniteLoop q;
  q.n_ = n;
  q.tab_ = std::move(table0);
  q.inv_.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.mul(x, y) == 0 && q.mul(y, x) == 0) {
        q.inv_[x] = y;
        break;
      }
  return q;
}

bool FiniteLoop::has_two_sided_inverses() const {
  for (int v : inv_)
    if (v < 0) return false;
  return true;
}

int FiniteLoop::inv(int x) const {
  if (inv_[x] < 0) throw CheckError("no-two-sided-inverse", {{"element", x + 1}});
  return inv_[x];
}

int FiniteLoop::power(int x, int k) const {
  if (k < 0) return power(inv(x), -k);
  int r = 0;
  for (int i = 0; i < k; ++i) r = (i == 0) ? x : mul(r, x);
  return r;
}

Perm FiniteLoop::L(int a) const {
  std::vector<int> img(n_);
  for (int y = 0; y < n_; ++y) img[y] = mul(a, y);
  return Perm(std::move(img));
}

Perm FiniteLoop::R(int a) const {
  std::vector<int> img(n_);
  for (int y = 0; y < n_; ++y) img[y] = mul(y, a);
  return Perm(std::move(img));
}

Perm FiniteLoop::J() const {
  std::vector<int> img(n_);
  for (int x = 0; x < n_; ++x) img[x] = inv(x);
  return Perm(std::move(img));
}

std::optional<std::array<int, 3>> FiniteLoop::associativity_witness(par::Exec exec) const {
  std::int64_t n = n_;
  auto hit = par::first_violation(n * n * n, exec, [&](std::int64_t i) {
    int x = static_cast<int>(i / (n * n)), y = static_cast<int>((i / n) % n), z = static_cast<int>(i % n);
    return mul(mul(x, y), z) == mul(x, mul(y, z));
  });
  if (!hit) return std::nullopt;
  std::int64_t i = *hit;
  return std::array<int, 3>{static_cast<int>(i / (n * n)), static_cast<int>((i / n) % n), static_cast<int>(i % n)};
}

std::vector<int> FiniteLoop::closure(std::vector<int> gens) const {
  std::vector<char> in(n_, 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  for (int g : gens) add(g);
  // product closure; in a finite loop this is automatically a subloop
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i && j < elems.size(); ++j) {
      add(mul(elems[i], elems[j]));
      add(mul(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> FiniteLoop::find_generators(int max_size) const {
  std::vector<int> subset;
  std::function<std::optional<std::vector<int>>(int, int)> rec = [&](int start, int left) -> std::optional<std::vector<int>> {
    if (static_cast<int>(closure(subset).size()) == n_) return subset;
    if (left == 0) return std::nullopt;
    for (int x = start; x < n_; ++x) {
      subset.push_back(x);
      if (auto r = rec(x + 1, left - 1)) return r;
      subset.pop_back();
    }
    return std::nullopt;
  };
  for (int k = 0; k <= max_size; ++k) {
    subset.clear();
    if (auto r = rec(1, k)) return *r;
  }
  throw CheckError("no-generating-set", {{"max_size", max_size}});
}

static nlohmann::json triple_witness(int a, int x, int y) {
  return {{"a", a + 1}, {"x", x + 1}, {"y", y + 1}};
}

LoopReport check_moufang(const FiniteLoop& q, par::Exec exec) {
  const std::int64_t n = q.order();
  LoopReport rep;
  rep.check = "moufang";
  rep.counts = {{"triples", n * n * n}};
  struct Id {
    const char* name;
    std::function<bool(int, int, int)> ok;
  };
  const std::array<Id, 3> ids = {
      Id{"left", [&](int a, int x, int y) { return q.mul(a, q.mul(x, q.mul(a, y))) == q.mul(q.mul(q.mul(a, x), a), y); }},
      Id{"middle", [&](int a, int x, int y) { return q.mul(q.mul(a, q.mul(x, y)), a) == q.mul(q.mul(a, x), q.mul(y, a)); }},
      Id{"right", [&](int a, int x, int y) { return q.mul(q.mul(q.mul(x, a), y), a) == q.mul(x, q.mul(a, q.mul(y, a))); }},
  };
  for (const auto& id : ids) {
    auto hit = par::first_violation(n * n * n, exec, [&](std::int64_t i) {
      int a = static_cast<int>(i / (n * n)), x = static_cast<int>((i / n) % n), y = static_cast<int>(i % n);
      return id.ok(a, x, y);
    });
    IdentityCheck c;
    c.name = id.name;
    c.pass = !hit.has_value();
    if (hit) {
      std::int64_t i = *hit;
      c.witness = triple_witness(static_cast<int>(i / (n * n)), static_cast<int>((i / n) % n), static_cast<int>(i % n));
    }
    rep.identities.push_back(std::move(c));
  }
  return rep;
}

LoopReport verify_doro_relations(const FiniteLoop& q, par::Exec exec) {
  const int n = q.order();
  if (!q.has_two_sided_inverses()) throw CheckError("not-moufang", {{"reason", "missing two-sided inverse"}});
  std::vector<Perm> Ls(n), Rs(n), Ps(n);
  for (int x = 0; x < n; ++x) {
    Ls[x] = q.L(x);
    Rs[x] = q.R(x);
    Ps[x] = Rs[x].inverse() * Ls[x].inverse();
  }
  LoopReport rep;
  rep.check = "doro";
  rep.counts = {{"pairs", n * n}};
  auto add_single = [&](const char* name, bool pass, nlohmann::json w) {
    rep.identities.push_back({name, pass, pass ? nlohmann::json() : std::move(w)});
  };

  add_single("P1_L1_R1", Ps[0].is_identity() && Ls[0].is_identity() && Rs[0].is_identity(), {{"x", 1}});

  auto scan_x = [&](const char* name, auto&& ok) {
    auto hit = par::first_violation(n, exec, [&](std::int64_t x) { return ok(static_cast<int>(x)); });
    add_single(name, !hit.has_value(), hit ? nlohmann::json{{"x", static_cast<int>(*hit) + 1}} : nlohmann::json());
  };
  scan_x("P_via_inverses", [&](int x) { return Ps[x] == Rs[q.inv(x)] * Ls[q.inv(x)]; });
  scan_x("P_L_R", [&](int x) { return (Ps[x] * Ls[x] * Rs[x]).is_identity(); });

  auto scan_xy = [&](const char* name, auto&& ok) {
    auto hit = par::first_violation(static_cast<std::int64_t>(n) * n, exec,
                                    [&](std::int64_t i) { return ok(static_cast<int>(i / n), static_cast<int>(i % n)); });
    nlohmann::json w;
    if (hit) w = {{"x", static_cast<int>(*hit / n) + 1}, {"y", static_cast<int>(*hit % n) + 1}};
    add_single(name, !hit.has_value(), std::move(w));
  };
  auto xyx = [&](int x, int y) { return q.mul(q.mul(x, y), x); };
  scan_xy("L_xyx", [&](int x, int y) { return Ls[xyx(x, y)] == Ls[x] * Ls[y] * Ls[x]; });
  scan_xy("R_xyx", [&](int x, int y) { return Rs[xyx(x, y)] == Rs[x] * Rs[y] * Rs[x]; });
  scan_xy("P_xyx", [&](int x, int y) { return Ps[xyx(x, y)] == Ps[x] * Ps[y] * Ps[x]; });
  // twisted families: arguments y^{-1}x and xy^{-1}
  scan_xy("L_yinv_x", [&](int x, int y) { return Ls[q.mul(q.inv(y), x)] == Rs[y] * Ls[x] * Ps[y]; });
  scan_xy("R_yinv_x", [&](int x, int y) { return Rs[q.mul(q.inv(y), x)] == Ps[y] * Rs[x] * Ls[y]; });
  scan_xy("P_yinv_x", [&](int x, int y) { return Ps[q.mul(q.inv(y), x)] == Ls[y] * Ps[x] * Rs[y]; });
  scan_xy("L_x_yinv", [&](int x, int y) { return Ls[q.mul(x, q.inv(y))] == Ps[y] * Ls[x] * Rs[y]; });
  scan_xy("R_x_yinv", [&](int x, int y) { return Rs[q.mul(x, q.inv(y))] == Ls[y] * Rs[x] * Ps[y]; });
  scan_xy("P_x_yinv", [&](int x, int y) { return Ps[q.mul(x, q.inv(y))] == Rs[y] * Ps[x] * Ls[y]; });
  return rep;
}

MultGroup multiplication_group(const FiniteLoop& q, std::size_t cap) {
  const int n = q.order();
  std::vector<Perm> gens;
  for (int a = 0; a < n; ++a) gens.push_back(q.L(a));
  for (int a = 0; a < n; ++a) gens.push_back(q.R(a));
  std::unordered_map<Perm, int, PermHash> index;
  std::vector<Perm> elems;
  std::queue<int> work;
  auto add = [&](const Perm& p) {
    auto [it, fresh] = index.emplace(p, static_cast<int>(elems.size()));
    if (fresh) {
      elems.push_back(p);
      work.push(it->second);
      if (elems.size() > cap) throw CheckError("mult-group-cap-exceeded", {{"cap", cap}});
    }
  };
  for (const auto& g : gens) add(g);
  while (!work.empty()) {
    Perm p = elems[work.front()];
    work.pop();
    for (const auto& g : gens) add(p * g);
  }
  std::sort(elems.begin(), elems.end());
  MultGroup mg;
  mg.elements = std::move(elems);
  for (const auto& g : gens) {
    auto it = std::lower_bound(mg.elements.begin(), mg.elements.end(), g);
    mg.generator_index.push_back(static_cast<int>(it - mg.elements.begin()));
  }
  return mg;
}

std::optional<Perm> find_loop_isomorphism(const FiniteLoop& a, const FiniteLoop& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  std::vector<int> gens = a.find_generators();
  // derivation order: every element of `a` as a product of earlier ones
  std::vector<int> order_;
  std::vector<std::array<int, 2>> how;  // positions in order_, or {-1,g} for seeds
  {
    std::vector<int> pos(n, -1);
    auto add = [&](int x, std::array<int, 2> h) {
      if (pos[x] >= 0) return;
      pos[x] = static_cast<int>(order_.size());
      order_.push_back(x);
      how.push_back(h);
    };
    add(0, {-1, -1});
    for (int g : gens) add(g, {-1, g});
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (std::size_t j = 0; j < order_.size(); ++j) {
        add(a.mul(order_[i], order_[j]), {static_cast<int>(i), static_cast<int>(j)});
        add(a.mul(order_[j], order_[i]), {static_cast<int>(j), static_cast<int>(i)});
      }
    if (static_cast<int>(order_.size()) != n) return std::nullopt;  // not generating (cannot happen)
  }
  const int k = static_cast<int>(gens.size());
  std::vector<int> choice(k, 0);
  std::vector<int> img_at(n);  // image of order_[i]
  while (true) {
    // build the candidate map from the generator images
    bool ok = true;
    std::vector<char> used(n, 0);
    for (int i = 0; i < n && ok; ++i) {
      int y;
      if (how[i][0] == -1)
        y = (how[i][1] == -1) ? 0 : choice[std::find(gens.begin(), gens.end(), how[i][1]) - gens.begin()];
      else
        y = b.mul(img_at[how[i][0]], img_at[how[i][1]]);
      img_at[i] = y;
      if (used[y]) ok = false;
      used[y] = 1;
    }
    if (ok) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[order_[i]] = img_at[i];
      Perm f(img);
      bool hom = true;
      for (int x = 0; x < n && hom; ++x)
        for (int y = 0; y < n && hom; ++y)
          if (f(a.mul(x, y)) != b.mul(f(x), f(y))) hom = false;
      if (hom) return f;
    }
    int c = k - 1;
    while (c >= 0 && choice[c] == n - 1) choice[c--] = 0;
    if (c < 0) return std::nullopt;
    ++choice[c];
  }
}

FiniteLoop parse_loop_text(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw CheckError("parse", {{"reason", "missing order"}});
  std::vector<int> tab;
  tab.reserve(static_cast<std::size_t>(n) * n);
  int v;
  while (in >> v) tab.push_back(v - 1);
  if (static_cast<int>(tab.size()) != n * n)
    throw CheckError("parse", {{"reason", "entry count"}, {"expected", n * n}, {"got", tab.size()}});
  return FiniteLoop::from_table(n, std::move(tab));
}

std::string loop_to_text(const FiniteLoop& q) {
  std::ostringstream out;
  const int n = q.order();
  out << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << q.mul(i, j) + 1;
    out << "\n";
  }
  return out.str();
}

nlohmann::json LoopReport::to_json() const {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& e : identities)
    ids.push_back({{"name", e.name}, {"pass", e.pass}, {"witness", e.witness}});
  return {{"check", check}, {"status", pass() ? "pass" : "fail"}, {"identities", ids}, {"counts", counts}};
}

}  // namespace triality
