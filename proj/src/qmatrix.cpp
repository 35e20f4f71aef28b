#include "triality/qmatrix.hpp"

#include <stdexcept>

namespace triality {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

QMatrix QMatrix::operator*(const Rat& c) const {
  QMatrix r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QVec QMatrix::apply(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  QVec r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

QMatrix QMatrix::from_flat(int rows, int cols, QVec flat) {
  if (static_cast<std::size_t>(rows) * cols != flat.size())
    throw std::invalid_argument("from_flat size mismatch");
  QMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.e_ = std::move(flat);
  return m;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

}  // namespace triality
