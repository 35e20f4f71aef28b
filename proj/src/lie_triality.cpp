#include "triality/lie_triality.hpp"

#include "triality/perm.hpp"

namespace triality {

QMatrix qmatrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw CheckError("bad-matrix-json", {{"reason", "expected nonempty array of rows"}});
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<int>(row.size()) != cols) throw CheckError("bad-matrix-json", {{"reason", "ragged rows"}, {"row", r + 1}});
    for (int c = 0; c < cols; ++c) m.at(r, c) = parse_rat(row.at(static_cast<std::size_t>(c)).get<std::string>());
  }
  return m;
}

nlohmann::json qmatrix_to_json(const QMatrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
    j.push_back(std::move(row));
  }
  return j;
}

namespace {

bool s3_relations(const QMatrix& rho, const QMatrix& sigma) {
  const QMatrix id = QMatrix::identity(rho.rows());
  return sigma * sigma == id && rho * rho * rho == id && sigma * rho == rho * rho * sigma;
}

}  // namespace

LieWithTriality LieWithTriality::make(AlgebraSC bracket, QMatrix rho, QMatrix sigma) {
  const int d = bracket.dim;
  if (rho.rows() != d || rho.cols() != d || sigma.rows() != d || sigma.cols() != d)
    throw CheckError("bad-matrix-shape", {{"dim", d}, {"rho_rows", rho.rows()}, {"sigma_rows", sigma.rows()}});
  if (!bracket.is_anticommutative()) throw CheckError("not-anticommutative", {});
  if (auto w = bracket.jacobi_witness())
    throw CheckError("jacobi-fails", {{"witness", {(*w)[0] + 1, (*w)[1] + 1, (*w)[2] + 1}}});
  if (!is_bracket_automorphism(bracket, rho)) throw CheckError("not-bracket-automorphism", {{"map", "rho"}});
  if (!is_bracket_automorphism(bracket, sigma)) throw CheckError("not-bracket-automorphism", {{"map", "sigma"}});
  if (!s3_relations(rho, sigma)) throw CheckError("bad-s3-relations", {});
  return LieWithTriality{std::move(bracket), std::move(rho), std::move(sigma)};
}

LieWithTriality LieWithTriality::from_json(const nlohmann::json& j) {
  return make(AlgebraSC::from_json(j), qmatrix_from_json(j.at("rho")), qmatrix_from_json(j.at("sigma")));
}

nlohmann::json LieWithTriality::to_json() const {
  nlohmann::json j = bracket.to_json();
  j["rho"] = qmatrix_to_json(rho);
  j["sigma"] = qmatrix_to_json(sigma);
  return j;
}

QMatrix triality_defect(const QMatrix& rho, const QMatrix& sigma) {
  const QMatrix id = QMatrix::identity(rho.rows());
  const QMatrix r2 = rho * rho;
  return id - sigma + rho - rho * sigma + r2 - r2 * sigma;
}

std::optional<int> lie_triality_witness(const QMatrix& rho, const QMatrix& sigma) {
  const QMatrix d = triality_defect(rho, sigma);
  for (int c = 0; c < d.cols(); ++c)
    for (int r = 0; r < d.rows(); ++r)
      if (d.at(r, c) != 0) return c;
  return std::nullopt;
}

bool check_lie_triality(const QMatrix& rho, const QMatrix& sigma) { return !lie_triality_witness(rho, sigma); }
bool check_lie_triality(const LieWithTriality& g) { return check_lie_triality(g.rho, g.sigma); }

bool alternating_sum_matches(const QMatrix& rho, const QMatrix& sigma) {
  // walk S₃ itself: τ = ρ^i σ^j with the sign read off the permutation parity
  const Perm rho_p({1, 2, 0}), sigma_p({1, 0, 2});
  QMatrix sum(rho.rows(), rho.cols());
  QMatrix rho_pow = QMatrix::identity(rho.rows());
  Perm word_pow = Perm::identity(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      const QMatrix tau = j == 0 ? rho_pow : rho_pow * sigma;
      const Perm word = j == 0 ? word_pow : word_pow * sigma_p;
      int inversions = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          if (word(a) > word(b)) ++inversions;
      sum = inversions % 2 == 0 ? sum + tau : sum - tau;
    }
    rho_pow = rho_pow * rho;
    word_pow = word_pow * rho_p;
  }
  return sum == triality_defect(rho, sigma);
}

bool eigen_one_criterion(const QMatrix& rho, const QMatrix& sigma) {
  const QMatrix id = QMatrix::identity(rho.rows());
  return kernel(sigma - id).contains_subspace(kernel(rho - id));
}

bool eigen_one_criterion(const LieWithTriality& g) { return eigen_one_criterion(g.rho, g.sigma); }

QMatrix OrthoLie::from_coords(const QVec& v) const {
  QMatrix m(8, 8);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m = m + basis[i] * v[i];
  return m;
}

OrthoLie ortho_lie(const CayleyAlgebra& o) {
  const AlgebraSC& a = o.alg;
  const int n = a.dim;
  auto c = [&](int i, int j, int k) { return a.mul_basis(i, j)[static_cast<std::size_t>(k)]; };

  // derivation conditions d(eᵢeⱼ) = d(eᵢ)eⱼ + eᵢd(eⱼ), unknowns d[p][q] flattened row-major
  QMatrix dcond(n * n * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k, ++row)
        for (int m = 0; m < n; ++m) {
          dcond.at(row, k * n + m) += c(i, j, m);
          dcond.at(row, m * n + i) -= c(m, j, k);
          dcond.at(row, m * n + j) -= c(i, m, k);
        }
  Subspace derk = kernel(dcond);

  // skewness dᵀN + Nd = 0 for the norm Gram matrix N
  QMatrix scond(n * n, n * n);
  row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j, ++row)
      for (int m = 0; m < n; ++m) {
        scond.at(row, m * n + i) += o.norm_gram.at(m, j);
        scond.at(row, m * n + j) += o.norm_gram.at(i, m);
      }
  Subspace skew = kernel(scond);
  if (!skew.contains_subspace(derk)) throw CheckError("derivations-not-skew", {{"der_dim", derk.dim()}});

  std::vector<QMatrix> der, basis;
  for (const QVec& v : derk.basis()) der.push_back(QMatrix::from_flat(n, n, v));
  basis = der;
  for (int i = 1; i < n; ++i) basis.push_back(a.lmat(a.basis_vec(i)));
  for (int i = 1; i < n; ++i) basis.push_back(a.rmat(a.basis_vec(i)));

  std::vector<QVec> flats;
  for (const QMatrix& m : basis) {
    if (!skew.contains(m.flat())) throw CheckError("multiplication-not-skew", {});
    flats.push_back(m.flat());
  }
  Subspace span = Subspace::span(n * n, flats);
  if (span.dim() != static_cast<int>(basis.size()))
    throw CheckError("parts-not-direct", {{"span", span.dim()}, {"parts", basis.size()}});
  if (!(span == skew)) throw CheckError("skew-not-spanned", {{"span", span.dim()}, {"skew", skew.dim()}});

  BasisSolver coords(flats);
  const int dim = static_cast<int>(basis.size());
  AlgebraSC lie = AlgebraSC::zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      QVec co = coords.coords(commutator(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]).flat());
      for (int k = 0; k < dim; ++k)
        if (co[static_cast<std::size_t>(k)] != 0) lie.set_anti(i, j, k, co[static_cast<std::size_t>(k)]);
    }
  return OrthoLie{std::move(skew), std::move(der), std::move(basis), std::move(coords), std::move(lie)};
}

TrialityAutosO triality_autos_o(const CayleyAlgebra& o, const OrthoLie& ol) {
  const int nd = static_cast<int>(ol.der.size()), n = ol.dim();
  QMatrix zeta(n, n), eta(n, n), rho_d(n, n), sig_d(n, n);
  for (int t = 0; t < nd; ++t) {
    zeta.at(t, t) = 1;
    eta.at(t, t) = 1;
    rho_d.at(t, t) = 1;
    sig_d.at(t, t) = 1;
  }
  for (int i = 0; i < 7; ++i) {
    const int l = ol.lpart(i), r = ol.rpart(i);
    zeta.at(l, l) = 1;
    zeta.at(r, l) = 1;  // ζ(L) = T
    zeta.at(r, r) = -1;
    eta.at(l, l) = -1;
    eta.at(l, r) = 1;  // η(R) = T
    eta.at(r, r) = 1;
    rho_d.at(r, l) = 1;  // ρ(L) = R
    rho_d.at(l, r) = -1;
    rho_d.at(r, r) = -1;  // ρ(R) = −T
    sig_d.at(r, l) = -1;  // σ(L) = −R
    sig_d.at(l, r) = -1;  // σ(R) = −L
  }
  QMatrix rho = eta * zeta, sigma = zeta * eta * zeta;
  if (rho != rho_d || sigma != sig_d) throw CheckError("triality-pair-mismatch", {});

  // d₁(xy) = d₂(x)y + x d₃(y) with d₂ = ζ(d₁), d₃ = η(d₁), on all basis pairs
  for (int t = 0; t < n; ++t) {
    QVec zcol = zero_vec(n), ecol = zero_vec(n);
    for (int s = 0; s < n; ++s) {
      zcol[static_cast<std::size_t>(s)] = zeta.at(s, t);
      ecol[static_cast<std::size_t>(s)] = eta.at(s, t);
    }
    const QMatrix d1 = ol.basis[static_cast<std::size_t>(t)], d2 = ol.from_coords(zcol), d3 = ol.from_coords(ecol);
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y) {
        QVec lhs = d1.apply(o.alg.mul_basis(x, y));
        QVec rhs = o.alg.mul(d2.apply(o.alg.basis_vec(x)), o.alg.basis_vec(y));
        QVec t2 = o.alg.mul(o.alg.basis_vec(x), d3.apply(o.alg.basis_vec(y)));
        for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += t2[k];
        if (lhs != rhs) throw CheckError("companion-identity-fails", {{"basis", t + 1}, {"x", x + 1}, {"y", y + 1}});
      }
  }
  for (const auto* m : {&zeta, &eta, &rho, &sigma})
    if (!is_bracket_automorphism(ol.lie, *m)) throw CheckError("not-bracket-automorphism", {{"map", "companion"}});
  if (!s3_relations(rho, sigma)) throw CheckError("bad-s3-relations", {});
  return TrialityAutosO{std::move(zeta), std::move(eta), std::move(rho), std::move(sigma)};
}

QMatrix LieOfMalcev::lambda_op(int i) const { return o.alg.lmat(o.alg.basis_vec(i + 1)); }
QMatrix LieOfMalcev::rho_op(int i) const { return o.alg.rmat(o.alg.basis_vec(i + 1)); }
QMatrix LieOfMalcev::t_op(int i) const { return lambda_op(i) + rho_op(i); }
QMatrix LieOfMalcev::ad_op(int i) const { return lambda_op(i) - rho_op(i); }

QVec LieOfMalcev::t_coords(int i) const {
  QVec v = zero_vec(ortho.dim());
  v[static_cast<std::size_t>(ortho.lpart(i))] = 1;
  v[static_cast<std::size_t>(ortho.rpart(i))] = 1;
  return v;
}

QMatrix LieOfMalcev::d_op(int i, int j) const {
  QVec br = o.o0_embed(malcev.mul_basis(i, j));
  QMatrix ad = o.alg.lmat(br) - o.alg.rmat(br);
  return ad - commutator(lambda_op(i), rho_op(j)) * 3;
}

LieOfMalcev lie_of_malcev(const CayleyAlgebra& o) {
  OrthoLie ol = ortho_lie(o);
  AlgebraSC malcev = o.o0_commutator();

  std::vector<QMatrix> gens;
  for (int i = 0; i < 7; ++i) {
    gens.push_back(o.alg.lmat(o.alg.basis_vec(i + 1)));
    gens.push_back(o.alg.rmat(o.alg.basis_vec(i + 1)));
  }
  ClosureResult cl = bracket_closure(gens, [](const QMatrix& x, const QMatrix& y) { return commutator(x, y); });
  if (!(cl.space == ol.skew)) throw CheckError("closure-mismatch", {{"closure", cl.space.dim()}, {"skew", ol.skew.dim()}});

  // a ↦ λ_a and a ↦ ρ_a respect linear combinations
  for (auto [i, j, s] : {std::array<int, 3>{0, 1, 2}, {3, 5, -4}}) {
    QVec v = o.alg.basis_vec(i + 1);
    const QVec w = o.alg.basis_vec(j + 1);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += Rat(s) * w[k];
    if (o.alg.lmat(v) != o.alg.lmat(o.alg.basis_vec(i + 1)) + o.alg.lmat(o.alg.basis_vec(j + 1)) * Rat(s) ||
        o.alg.rmat(v) != o.alg.rmat(o.alg.basis_vec(i + 1)) + o.alg.rmat(o.alg.basis_vec(j + 1)) * Rat(s))
      throw CheckError("pesh-relation", {{"family", "linearity"}, {"pair", {i + 1, j + 1}}});
  }
  // bracket families on all basis pairs
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      const QMatrix la = o.alg.lmat(o.alg.basis_vec(i + 1)), lb = o.alg.lmat(o.alg.basis_vec(j + 1));
      const QMatrix ra = o.alg.rmat(o.alg.basis_vec(i + 1)), rb = o.alg.rmat(o.alg.basis_vec(j + 1));
      const QVec br = o.o0_embed(malcev.mul_basis(i, j));
      const QMatrix mixed = commutator(la, rb);
      if (commutator(la, lb) != o.alg.lmat(br) - mixed * 2)
        throw CheckError("pesh-relation", {{"family", "lambda-lambda"}, {"pair", {i + 1, j + 1}}});
      if (commutator(ra, rb) != -o.alg.rmat(br) - mixed * 2)
        throw CheckError("pesh-relation", {{"family", "rho-rho"}, {"pair", {i + 1, j + 1}}});
      if (mixed != commutator(ra, lb))
        throw CheckError("pesh-relation", {{"family", "lambda-rho"}, {"pair", {i + 1, j + 1}}});
    }

  TrialityAutosO autos = triality_autos_o(o, ol);
  LieWithTriality lie = LieWithTriality::make(ol.lie, autos.rho, autos.sigma);
  if (!check_lie_triality(lie)) throw CheckError("triality-fails", {});

  LieOfMalcev result{o, std::move(lie), std::move(ol), std::move(autos), std::move(malcev), Subspace(0)};
  std::vector<QVec> tv;
  for (int i = 0; i < 7; ++i) tv.push_back(result.t_coords(i));
  result.lie_minus = Subspace::span(result.ortho.dim(), tv);
  if (result.lie_minus.dim() != 7) throw CheckError("t-map-not-injective", {{"dim", result.lie_minus.dim()}});
  return result;
}

AlgebraSC two_dim_nonabelian() {
  AlgebraSC s = AlgebraSC::zero(2);
  s.set_anti(0, 1, 0, 1);
  return s;
}

LieWithTriality wreath_lie(const AlgebraSC& base) {
  AlgebraSC three = direct_sum(direct_sum(base, base), base);
  const int d = base.dim, n = 3 * d;
  QMatrix rho(n, n), sigma(n, n);
  for (int k = 0; k < 3; ++k)
    for (int t = 0; t < d; ++t) rho.at(((k + 1) % 3) * d + t, k * d + t) = 1;
  for (int t = 0; t < d; ++t) {
    sigma.at(d + t, t) = 1;
    sigma.at(t, d + t) = 1;
    sigma.at(2 * d + t, 2 * d + t) = 1;
  }
  return LieWithTriality::make(std::move(three), std::move(rho), std::move(sigma));
}

}  // namespace triality
