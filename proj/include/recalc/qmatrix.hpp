#ifndef RECALC_QMATRIX_HPP
#define RECALC_QMATRIX_HPP

#include "recalc/qscalar.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recalc {

// Dense row-major matrix over a commutative ring T.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T &operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T &operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto &x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix &operator+=(const Matrix &o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix &operator-=(const Matrix &o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(const T &s, Matrix a) {
    for (auto &x : a.a_) x = s * x;
    return a;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const T &x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T &y = b(k, j);
          if (!y.is_zero()) r(i, j) += x * y;
        }
      }
    }
    return r;
  }

  friend bool operator==(const Matrix &, const Matrix &) = default;

  Matrix kron(const Matrix &b) const {
    Matrix r(rows_ * b.rows_, cols_ * b.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const T &x = (*this)(i, j);
        if (x.is_zero()) continue;
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l)
            if (!b(k, l).is_zero()) r(i * b.rows_ + k, j * b.cols_ + l) = x * b(k, l);
      }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
    Matrix<decltype(f(std::declval<T>()))> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

private:
  void check_same(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix sum: dimension mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<QScalar>;

// Reduced row echelon form over Q(q), in place.  Returns pivot columns.
std::vector<int> rref(QMatrix &m);
int rank(QMatrix m);
// Solve A X = B exactly.  Throws if A is singular.
QMatrix solve(const QMatrix &a, const QMatrix &b);
QMatrix inverse(const QMatrix &a);

} // namespace recalc

#endif
