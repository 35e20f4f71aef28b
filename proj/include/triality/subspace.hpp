#pragma once
#include <functional>
#include <optional>

#include "triality/qmatrix.hpp"

namespace triality {

// Rational subspace kept as a reduced-row-echelon basis. Two subspaces are
// span-equal exactly when the stored bases coincide, so equality is literal.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}
  static Subspace span(int ambient_dim, const std::vector<QVec>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<QVec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  QVec reduce(QVec v) const;  // residual of v modulo the subspace
  bool contains(const QVec& v) const { return is_zero_vec(reduce(v)); }
  bool insert(QVec v);  // true if the dimension grew
  bool contains_subspace(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_;
  std::vector<QVec> rows_;
  std::vector<int> pivots_;  // strictly increasing pivot column per row
};

Subspace kernel(const QMatrix& m);
std::optional<QVec> solve(const QMatrix& m, const QVec& rhs);
std::optional<QMatrix> inverse(const QMatrix& m);

// Coordinates with respect to a fixed independent family of column vectors.
// Queries restrict to the pivot coordinates of the family, so each coords()
// call costs one k×k multiply instead of a fresh elimination.
class BasisSolver {
 public:
  explicit BasisSolver(std::vector<QVec> basis_vectors);
  QVec coords(const QVec& v) const;  // c with Σ cᵢ·basisᵢ = v; throws std::invalid_argument if v outside the span
  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<QVec>& vectors() const { return basis_; }

 private:
  std::vector<QVec> basis_;
  std::vector<int> pivots_;
  QMatrix inv_;  // inverse of the pivot-row restriction
};

// Smallest subspace of square matrices containing the seed and closed under
// the bilinear bracket. Grows a worklist: brackets of new members against all
// current representatives (both orders) until the dimension stabilizes.
struct ClosureResult {
  Subspace space;
  std::vector<QMatrix> reps;  // independent representatives, insertion order
};
using MatBracket = std::function<QMatrix(const QMatrix&, const QMatrix&)>;
ClosureResult bracket_closure(const std::vector<QMatrix>& seed, const MatBracket& bracket);

}  // namespace triality
