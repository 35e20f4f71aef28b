#include "triality/cayley.hpp"

namespace triality {

namespace {

struct Level {
  AlgebraSC alg;
  QMatrix conj;
};

Level base_field() {
  Level l{AlgebraSC::zero(1), QMatrix::identity(1)};
  l.alg.set(0, 0, 0, 1);
  return l;
}

Level double_up(const Level& o, const Rat& mu) {
  const int d = o.alg.dim, n = 2 * d;
  Level l{AlgebraSC::zero(n), QMatrix(n, n)};
  auto lift = [&](const QVec& v, bool second_half) {
    QVec out = zero_vec(n);
    for (int k = 0; k < d; ++k) out[static_cast<std::size_t>(second_half ? d + k : k)] = v[static_cast<std::size_t>(k)];
    return out;
  };
  auto cj = [&](int i) { return o.conj.apply(o.alg.basis_vec(i)); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVec first, second;
      if (i < d && j < d) {
        first = o.alg.mul_basis(i, j);
        second = zero_vec(d);
      } else if (i < d && j >= d) {
        first = zero_vec(d);
        second = o.alg.mul(o.alg.basis_vec(j - d), o.alg.basis_vec(i));
      } else if (i >= d && j < d) {
        first = zero_vec(d);
        second = o.alg.mul(o.alg.basis_vec(i - d), cj(j));
      } else {
        first = o.alg.mul(cj(j - d), o.alg.basis_vec(i - d));
        for (auto& x : first) x *= mu;
        second = zero_vec(d);
      }
      QVec prod = lift(first, false);
      QVec sh = lift(second, true);
      for (int k = 0; k < n; ++k) prod[static_cast<std::size_t>(k)] += sh[static_cast<std::size_t>(k)];
      for (int k = 0; k < n; ++k) l.alg.set(i, j, k, prod[static_cast<std::size_t>(k)]);
    }
  for (int j = 0; j < d; ++j) {
    QVec col = o.conj.apply(o.alg.basis_vec(j));
    for (int i = 0; i < d; ++i) l.conj.at(i, j) = col[static_cast<std::size_t>(i)];
    l.conj.at(d + j, d + j) = -1;
  }
  return l;
}

}  // namespace

Rat CayleyAlgebra::norm(const QVec& x) const { return norm_bi(x, x); }

Rat CayleyAlgebra::norm_bi(const QVec& x, const QVec& y) const {
  QVec ny = norm_gram.apply(y);
  Rat s = 0;
  for (std::size_t i = 0; i < ny.size(); ++i) s += x[i] * ny[i];
  return s;
}

QVec CayleyAlgebra::trace(const QVec& x) const {
  QVec t = conj.apply(x);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += x[i];
  return t;
}

AlgebraSC CayleyAlgebra::o0_commutator() const {
  AlgebraSC b = AlgebraSC::zero(7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      QVec u = alg.mul(alg.basis_vec(i + 1), alg.basis_vec(j + 1));
      QVec v = alg.mul(alg.basis_vec(j + 1), alg.basis_vec(i + 1));
      for (std::size_t k = 0; k < u.size(); ++k) u[k] -= v[k];
      if (u[0] != 0) throw CheckError("commutator-not-traceless", {{"i", i + 2}, {"j", j + 2}});
      for (int k = 0; k < 7; ++k) b.set(i, j, k, u[static_cast<std::size_t>(k + 1)]);
    }
  return b;
}

QVec CayleyAlgebra::o0_embed(const QVec& v7) const {
  QVec v = zero_vec(8);
  for (int k = 0; k < 7; ++k) v[static_cast<std::size_t>(k + 1)] = v7[static_cast<std::size_t>(k)];
  return v;
}

QVec CayleyAlgebra::o0_project(const QVec& v8) const {
  if (v8[0] != 0) throw CheckError("not-traceless", {{"coefficient", rat_str(v8[0])}});
  QVec v = zero_vec(7);
  for (int k = 0; k < 7; ++k) v[static_cast<std::size_t>(k)] = v8[static_cast<std::size_t>(k + 1)];
  return v;
}

CayleyAlgebra build_cayley(const Rat& alpha, const Rat& beta, const Rat& gamma) {
  if (alpha == 0 || beta == 0 || gamma == 0)
    throw CheckError("zero-parameter", {{"alpha", rat_str(alpha)}, {"beta", rat_str(beta)}, {"gamma", rat_str(gamma)}});
  Level l = double_up(double_up(double_up(base_field(), alpha), beta), gamma);
  CayleyAlgebra o{alpha, beta, gamma, std::move(l.alg), std::move(l.conj), QMatrix(8, 8), Subspace(8)};

  const AlgebraSC& a = o.alg;
  for (int i = 0; i < 8; ++i) {
    if (a.mul(a.basis_vec(0), a.basis_vec(i)) != a.basis_vec(i) ||
        a.mul(a.basis_vec(i), a.basis_vec(0)) != a.basis_vec(i))
      throw CheckError("not-unital", {{"i", i + 1}});
  }
  // alternativity via the alternating associator, fully polarized
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        QVec ei = a.basis_vec(i), ej = a.basis_vec(j), ek = a.basis_vec(k);
        QVec s = a.assoc(ei, ej, ek), t = a.assoc(ej, ei, ek);
        for (std::size_t m = 0; m < s.size(); ++m) s[m] += t[m];
        if (!is_zero_vec(s)) throw CheckError("not-left-alternative", {{"i", i + 1}, {"j", j + 1}, {"k", k + 1}});
        s = a.assoc(ei, ej, ek);
        t = a.assoc(ei, ek, ej);
        for (std::size_t m = 0; m < s.size(); ++m) s[m] += t[m];
        if (!is_zero_vec(s)) throw CheckError("not-right-alternative", {{"i", i + 1}, {"j", j + 1}, {"k", k + 1}});
      }
  // x·x̄ lands in F·1 (checked polarized), giving the norm's bilinear form
  o.norm_gram = QMatrix(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      QVec s = a.mul(a.basis_vec(i), o.conj.apply(a.basis_vec(j)));
      QVec t = a.mul(a.basis_vec(j), o.conj.apply(a.basis_vec(i)));
      for (std::size_t m = 0; m < s.size(); ++m) s[m] += t[m];
      for (int m = 1; m < 8; ++m)
        if (s[static_cast<std::size_t>(m)] != 0) throw CheckError("norm-not-scalar", {{"i", i + 1}, {"j", j + 1}});
      o.norm_gram.at(i, j) = s[0] / 2;
    }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      QVec p = a.mul(a.basis_vec(i), a.basis_vec(j));
      if (o.norm(p) != o.norm(a.basis_vec(i)) * o.norm(a.basis_vec(j)))
        throw CheckError("norm-not-multiplicative", {{"i", i + 1}, {"j", j + 1}});
    }
  QMatrix tr = o.conj + QMatrix::identity(8);
  o.trace0 = kernel(tr);
  std::vector<QVec> expected;
  for (int i = 1; i < 8; ++i) expected.push_back(a.basis_vec(i));
  if (!(o.trace0 == Subspace::span(8, expected))) throw CheckError("trace0-unexpected", {{"dim", o.trace0.dim()}});
  return o;
}

std::optional<QVec> find_isotropic(const CayleyAlgebra& o) {
  for (int i = 0; i < 8; ++i)
    if (o.norm(o.alg.basis_vec(i)) == 0) return o.alg.basis_vec(i);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si = -1; si <= 1; si += 2) {
        QVec v = zero_vec(8);
        v[static_cast<std::size_t>(i)] = si;
        v[static_cast<std::size_t>(j)] = 1;
        if (o.norm(v) == 0) return v;
      }
  return std::nullopt;
}

}  // namespace triality
