#include "triality/subspace.hpp"

#include <stdexcept>

namespace triality {

Subspace Subspace::span(int ambient_dim, const std::vector<QVec>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

QVec Subspace::reduce(QVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (c == 0) continue;
    Rat f = c;  // rows are pivot-normalized to 1
    for (int j = pivots_[r]; j < ambient_; ++j)
      if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool Subspace::insert(QVec v) {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("subspace ambient mismatch");
  v = reduce(std::move(v));
  int p = -1;
  for (int j = 0; j < ambient_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Rat lead = v[p];
  for (int j = p; j < ambient_; ++j)
    if (v[j] != 0) v[j] /= lead;
  // back-eliminate the new pivot column from existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat c = rows_[r][p];
    if (c == 0) continue;
    for (int j = p; j < ambient_; ++j)
      if (v[j] != 0) rows_[r][j] -= c * v[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool Subspace::contains_subspace(const Subspace& o) const {
  for (const auto& v : o.rows_)
    if (!contains(v)) return false;
  return true;
}

Subspace kernel(const QMatrix& m) {
  // row-reduce a copy, then read the free-column solutions
  int nr = m.rows(), nc = m.cols();
  std::vector<QVec> rr;
  Subspace rowspace(nc);
  for (int i = 0; i < nr; ++i) {
    QVec row(nc);
    for (int j = 0; j < nc; ++j) row[j] = m.at(i, j);
    rowspace.insert(std::move(row));
  }
  const auto& rows = rowspace.basis();
  std::vector<int> pivot_of_col(nc, -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int p = 0;
    while (rows[r][p] == 0) ++p;
    pivot_of_col[p] = static_cast<int>(r);
  }
  Subspace ker(nc);
  for (int f = 0; f < nc; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    QVec v(nc, Rat(0));
    v[f] = 1;
    for (int j = 0; j < nc; ++j)
      if (pivot_of_col[j] >= 0) v[j] = -rows[pivot_of_col[j]][f];
    ker.insert(std::move(v));
  }
  return ker;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& rhs) {
  int nr = m.rows(), nc = m.cols();
  if (static_cast<int>(rhs.size()) != nr) throw std::invalid_argument("solve rhs size mismatch");
  // RREF of the augmented system [m | rhs]
  Subspace aug(nc + 1);
  for (int i = 0; i < nr; ++i) {
    QVec row(nc + 1);
    for (int j = 0; j < nc; ++j) row[j] = m.at(i, j);
    row[nc] = rhs[i];
    aug.insert(std::move(row));
  }
  std::vector<int> pivot_of_col(nc, -1);
  const auto& rows = aug.basis();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int p = 0;
    while (rows[r][p] == 0) ++p;
    if (p == nc) return std::nullopt;  // 0 = 1 row: inconsistent
    pivot_of_col[p] = static_cast<int>(r);
  }
  QVec x(nc, Rat(0));  // free variables set to zero
  for (int j = 0; j < nc; ++j)
    if (pivot_of_col[j] >= 0) x[j] = rows[pivot_of_col[j]][nc];
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  Subspace aug(2 * n);
  for (int i = 0; i < n; ++i) {
    QVec row(static_cast<std::size_t>(2 * n), Rat(0));
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = m.at(i, j);
    row[static_cast<std::size_t>(n + i)] = 1;
    aug.insert(std::move(row));
  }
  // invertible exactly when the left block reduces to the identity
  const auto& rows = aug.basis();
  if (static_cast<int>(rows.size()) != n) return std::nullopt;
  for (int r = 0; r < n; ++r)
    if (aug.pivots()[static_cast<std::size_t>(r)] != r) return std::nullopt;
  QMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) inv.at(r, j) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + j)];
  return inv;
}

BasisSolver::BasisSolver(std::vector<QVec> basis_vectors) : basis_(std::move(basis_vectors)) {
  if (basis_.empty()) throw std::invalid_argument("BasisSolver: empty basis");
  const int m = static_cast<int>(basis_[0].size());
  Subspace sp(m);
  for (const auto& v : basis_) {
    if (static_cast<int>(v.size()) != m) throw std::invalid_argument("BasisSolver: ragged basis");
    if (!sp.insert(v)) throw std::invalid_argument("BasisSolver: dependent basis");
  }
  pivots_ = sp.pivots();
  const int k = static_cast<int>(basis_.size());
  QMatrix s(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) s.at(r, c) = basis_[static_cast<std::size_t>(c)][static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])];
  auto inv = inverse(s);
  if (!inv) throw std::invalid_argument("BasisSolver: pivot restriction singular");
  inv_ = std::move(*inv);
}

QVec BasisSolver::coords(const QVec& v) const {
  const int k = size();
  QVec rest(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) rest[static_cast<std::size_t>(r)] = v[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])];
  QVec c = inv_.apply(rest);
  QVec check(v.size(), Rat(0));
  for (int i = 0; i < k; ++i) {
    if (c[static_cast<std::size_t>(i)] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) check[j] += c[static_cast<std::size_t>(i)] * basis_[static_cast<std::size_t>(i)][j];
  }
  if (check != v) throw std::invalid_argument("BasisSolver: vector outside the span");
  return c;
}

ClosureResult bracket_closure(const std::vector<QMatrix>& seed, const MatBracket& bracket) {
  if (seed.empty()) throw std::invalid_argument("bracket_closure: empty seed");
  int n = seed[0].rows();
  for (const auto& m : seed)
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("bracket_closure: need square matrices of equal size");
  ClosureResult res{Subspace(n * n), {}};
  std::vector<QMatrix> work;
  auto push = [&](const QMatrix& m) {
    if (res.space.insert(m.flat())) {
      res.reps.push_back(m);
      work.push_back(m);
    }
  };
  for (const auto& m : seed) push(m);
  while (!work.empty()) {
    QMatrix a = std::move(work.back());
    work.pop_back();
    // brackets against every representative accumulated so far, both orders
    for (std::size_t i = 0; i < res.reps.size(); ++i) {
      push(bracket(a, res.reps[i]));
      push(bracket(res.reps[i], a));
    }
  }
  return res;
}

}  // namespace triality
