#include "triality/structure_constants.hpp"

#include <algorithm>
#include <set>

namespace triality {

AlgebraSC AlgebraSC::zero(int d) {
  AlgebraSC sc;
  sc.dim = d;
  sc.c.assign(static_cast<std::size_t>(d) * d, zero_vec(d));
  return sc;
}

QVec AlgebraSC::mul(const QVec& x, const QVec& y) const {
  QVec out = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[static_cast<std::size_t>(j)] == 0) continue;
      const Rat f = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      const QVec& cij = mul_basis(i, j);
      for (int k = 0; k < dim; ++k)
        if (cij[static_cast<std::size_t>(k)] != 0) out[static_cast<std::size_t>(k)] += f * cij[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

QVec AlgebraSC::assoc(const QVec& x, const QVec& y, const QVec& z) const {
  QVec l = mul(mul(x, y), z), r = mul(x, mul(y, z));
  for (std::size_t k = 0; k < l.size(); ++k) l[k] -= r[k];
  return l;
}

QVec AlgebraSC::jac(const QVec& x, const QVec& y, const QVec& z) const {
  QVec out = mul(mul(x, y), z);
  QVec t = mul(mul(y, z), x);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += t[k];
  t = mul(mul(z, x), y);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += t[k];
  return out;
}

QMatrix AlgebraSC::lmat(const QVec& x) const {
  QMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    QVec col = mul(x, basis_vec(j));
    for (int i = 0; i < dim; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

QMatrix AlgebraSC::rmat(const QVec& x) const {
  QMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    QVec col = mul(basis_vec(j), x);
    for (int i = 0; i < dim; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

QVec AlgebraSC::basis_vec(int i) const {
  QVec v = zero_vec(dim);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool AlgebraSC::is_anticommutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) {
      const QVec &a = mul_basis(i, j), &b = mul_basis(j, i);
      for (int k = 0; k < dim; ++k)
        if (a[static_cast<std::size_t>(k)] != -b[static_cast<std::size_t>(k)]) return false;
    }
  return true;
}

std::optional<std::array<int, 3>> AlgebraSC::jacobi_witness() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (!is_zero_vec(jac(basis_vec(i), basis_vec(j), basis_vec(k))))
          return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

AlgebraSC AlgebraSC::from_json(const nlohmann::json& j) {
  const int d = j.at("dim").get<int>();
  if (d < 1) throw CheckError("bad-dim", {{"dim", d}});
  AlgebraSC sc = zero(d);
  std::set<std::pair<int, int>> present;
  for (const auto& entry : j.at("bracket")) {
    if (!entry.is_array() || entry.size() != 3) throw CheckError("bad-entry", {{"entry", entry}});
    const int i = entry[0].get<int>() - 1, jj = entry[1].get<int>() - 1;
    if (i < 0 || i >= d || jj < 0 || jj >= d) throw CheckError("bad-index", {{"i", i + 1}, {"j", jj + 1}});
    if (!present.insert({i, jj}).second) throw CheckError("duplicate-pair", {{"i", i + 1}, {"j", jj + 1}});
    QVec v = zero_vec(d);
    for (const auto& term : entry[2]) {
      const int k = term[0].get<int>() - 1;
      if (k < 0 || k >= d) throw CheckError("bad-index", {{"k", k + 1}});
      v[static_cast<std::size_t>(k)] = parse_rat(term[1].get<std::string>());
    }
    sc.c[static_cast<std::size_t>(i) * d + jj] = std::move(v);
  }
  for (int i = 0; i < d; ++i)
    for (int jj = 0; jj < d; ++jj) {
      if (present.count({i, jj}) || !present.count({jj, i})) continue;
      QVec v = sc.mul_basis(jj, i);
      for (auto& x : v) x = -x;
      sc.c[static_cast<std::size_t>(i) * d + jj] = std::move(v);
    }
  return sc;
}

nlohmann::json AlgebraSC::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const QVec &v = mul_basis(i, j), &t = mul_basis(j, i);
      bool nonzero = !is_zero_vec(v);
      bool completion_wrong = false;
      for (int k = 0; k < dim && !completion_wrong; ++k)
        if (v[static_cast<std::size_t>(k)] != -t[static_cast<std::size_t>(k)]) completion_wrong = true;
      if (!nonzero && !completion_wrong) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (int k = 0; k < dim; ++k)
        if (v[static_cast<std::size_t>(k)] != 0)
          terms.push_back({k + 1, rat_str(v[static_cast<std::size_t>(k)])});
      entries.push_back({i + 1, j + 1, terms});
    }
  return {{"dim", dim}, {"bracket", entries}};
}

AlgebraSC direct_sum(const AlgebraSC& a, const AlgebraSC& b) {
  AlgebraSC s = AlgebraSC::zero(a.dim + b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) s.set(i, j, k, a.mul_basis(i, j)[static_cast<std::size_t>(k)]);
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      for (int k = 0; k < b.dim; ++k)
        s.set(a.dim + i, a.dim + j, a.dim + k, b.mul_basis(i, j)[static_cast<std::size_t>(k)]);
  return s;
}

AlgebraSC sl2() {
  // basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
  AlgebraSC s = AlgebraSC::zero(3);
  s.set_anti(0, 1, 2, 1);
  s.set_anti(2, 0, 0, 2);
  s.set_anti(2, 1, 1, -2);
  return s;
}

std::optional<std::array<int, 4>> malcev_witness(const AlgebraSC& sc, par::Exec exec) {
  if (!sc.is_anticommutative()) throw CheckError("not-anticommutative", {});
  const int d = sc.dim;
  const std::int64_t total = static_cast<std::int64_t>(d) * d * d * d;
  auto ok = [&](std::int64_t t) {
    const int x = static_cast<int>(t / (d * d * d)), y = static_cast<int>((t / (d * d)) % d),
              z = static_cast<int>((t / d) % d), w = static_cast<int>(t % d);
    if (x > w) return true;  // symmetric in (x, w)
    QVec ex = sc.basis_vec(x), ey = sc.basis_vec(y), ez = sc.basis_vec(z), ew = sc.basis_vec(w);
    QVec lhs = sc.jac(ex, ey, sc.mul(ew, ez));
    QVec t2 = sc.jac(ew, ey, sc.mul(ex, ez));
    for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] += t2[k];
    QVec rhs = sc.mul(sc.jac(ex, ey, ez), ew);
    t2 = sc.mul(sc.jac(ew, ey, ez), ex);
    for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += t2[k];
    return lhs == rhs;
  };
  auto bad = par::first_violation(total, exec, ok);
  if (!bad) return std::nullopt;
  const std::int64_t t = *bad;
  return std::array<int, 4>{static_cast<int>(t / (d * d * d)), static_cast<int>((t / (d * d)) % d),
                            static_cast<int>((t / d) % d), static_cast<int>(t % d)};
}

bool check_malcev(const AlgebraSC& sc, par::Exec exec) { return !malcev_witness(sc, exec).has_value(); }

Subspace nalt(const AlgebraSC& sc) {
  const int d = sc.dim;
  std::vector<QVec> rows;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      QVec ex = sc.basis_vec(x), ey = sc.basis_vec(y);
      // columns: coefficient of each basis choice of a
      std::vector<QVec> s1(static_cast<std::size_t>(d)), s2(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) {
        QVec ei = sc.basis_vec(i);
        QVec a1 = sc.assoc(ei, ex, ey), a2 = sc.assoc(ex, ei, ey), a3 = sc.assoc(ex, ey, ei);
        QVec r1 = zero_vec(d), r2 = zero_vec(d);
        for (int k = 0; k < d; ++k) {
          r1[static_cast<std::size_t>(k)] = a1[static_cast<std::size_t>(k)] + a2[static_cast<std::size_t>(k)];
          r2[static_cast<std::size_t>(k)] = a1[static_cast<std::size_t>(k)] - a3[static_cast<std::size_t>(k)];
        }
        s1[static_cast<std::size_t>(i)] = std::move(r1);
        s2[static_cast<std::size_t>(i)] = std::move(r2);
      }
      for (int k = 0; k < d; ++k) {
        QVec row1(static_cast<std::size_t>(d)), row2(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
          row1[static_cast<std::size_t>(i)] = s1[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
          row2[static_cast<std::size_t>(i)] = s2[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
        rows.push_back(std::move(row1));
        rows.push_back(std::move(row2));
      }
    }
  QMatrix m(static_cast<int>(rows.size()), d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < d; ++j) m.at(static_cast<int>(r), j) = rows[r][static_cast<std::size_t>(j)];
  return kernel(m);
}

bool is_bracket_automorphism(const AlgebraSC& sc, const QMatrix& m) {
  if (m.rows() != sc.dim || m.cols() != sc.dim) return false;
  const int d = sc.dim;
  // slice form: with (Sₖ)_{ab} the eₖ-coefficient of e_a∘e_b, the condition
  // m(e_a∘e_b) = m(e_a)∘m(e_b) reads Σₗ m_{kl} Sₗ = mᵀ Sₖ m for every k
  std::vector<QMatrix> s(static_cast<std::size_t>(d), QMatrix(d, d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const QVec& v = sc.mul_basis(a, b);
      for (int k = 0; k < d; ++k)
        if (v[static_cast<std::size_t>(k)] != 0) s[static_cast<std::size_t>(k)].at(a, b) = v[static_cast<std::size_t>(k)];
    }
  const QMatrix mt = m.transpose();
  for (int k = 0; k < d; ++k) {
    QMatrix lhs(d, d);
    for (int l = 0; l < d; ++l)
      if (m.at(k, l) != 0) lhs = lhs + s[static_cast<std::size_t>(l)] * m.at(k, l);
    if (lhs != mt * s[static_cast<std::size_t>(k)] * m) return false;
  }
  return true;
}

}  // namespace triality
