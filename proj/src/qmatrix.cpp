#include "recalc/qmatrix.hpp"

namespace recalc {

namespace {

std::size_t weight(const QScalar &x) { return x.num().c.size() + x.den().c.size(); }

} // namespace

std::vector<int> rref(QMatrix &m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int best = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      if (best < 0 || weight(m(i, col)) < weight(m(best, col))) best = i;
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
    QScalar inv = m(row, col).inverse();
    for (int j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      QScalar f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

QMatrix solve(const QMatrix &a, const QMatrix &b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  int n = a.rows();
  QMatrix aug(n, n + b.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
    throw std::domain_error("solve: singular matrix");
  QMatrix x(n, b.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
  return x;
}

QMatrix inverse(const QMatrix &a) { return solve(a, QMatrix::identity(a.rows())); }

} // namespace recalc
