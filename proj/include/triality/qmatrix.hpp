#pragma once
#include "triality/rational.hpp"

namespace triality {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const Rat& c) const;
  QMatrix operator-() const { return *this * Rat(-1); }
  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  QMatrix transpose() const;
  QVec apply(const QVec& v) const;  // column-vector convention: (M v)_r
  const QVec& flat() const { return e_; }  // row-major
  static QMatrix from_flat(int rows, int cols, QVec flat);

 private:
  int rows_ = 0, cols_ = 0;
  QVec e_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);  // ab - ba

}  // namespace triality
