#ifndef RECALC_RMATRIX_HPP
#define RECALC_RMATRIX_HPP

#include "recalc/qmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recalc {

// Operator on V^{(x)k}, dim V = N.  Rows carry the lower multi-index
// (i1..ik), columns the upper one, both row-major, so that
// (XY)_i^j = sum_k X_i^k Y_k^j is the ordinary matrix product.
//
// `deform` is the parameter entering the Hecke condition
// (R - v)(R + 1/v) = 0 and all derived q-numbers: the symbol q for
// genuinely quantum R-matrices, the constant 1 for the flip.
struct ROperator {
  int N = 0;
  int arity = 0;
  QMatrix m;
  QScalar deform = QScalar::q();

  int side() const { return m.rows(); }
  QScalar at(std::initializer_list<int> row, std::initializer_list<int> col) const;
  friend bool operator==(const ROperator &, const ROperator &) = default;
};

int ipow(int b, int e);
// Multi-index (0-based) <-> flat offset.
int flat_index(const std::vector<int> &idx, int N);
std::vector<int> multi_index(int flat, int N, int k);

ROperator identity_op(int N, int arity, const QScalar &deform = QScalar::q());
ROperator make_flip(int N);
ROperator make_dj(int N);
ROperator lift(const ROperator &x, int position, int total);
ROperator op_mul(const ROperator &a, const ROperator &b);
ROperator op_sub(const ROperator &a, const ROperator &b);
ROperator op_scale(const QScalar &s, const ROperator &a);
ROperator op_inverse(const ROperator &a);
// (G (x) G) R (G (x) G)^{-1}
ROperator change_basis(const ROperator &r, const QMatrix &g);

// k_v for the operator's deformation parameter.
QScalar v_int(const QScalar &v, int k);

ROperator ybe_residual(const ROperator &r);
ROperator hecke_residual(const ROperator &r);

class NotSkewInvertible : public std::runtime_error {
public:
  NotSkewInvertible(const std::string &what, int defect)
      : std::runtime_error(what), rank_defect(defect) {}
  int rank_defect;
};

ROperator skew_inverse(const ROperator &r);
// Residuals of the two defining contractions (arity-2 operators on spaces 1,3).
std::pair<QMatrix, QMatrix> skew_inverse_residuals(const ROperator &r, const ROperator &psi);

struct TraceForm {
  QMatrix b;
  QMatrix c;
  int m_rank = 0; // 0 until detected
};

TraceForm bc_operators(const ROperator &r, const ROperator &psi);
std::pair<QMatrix, QMatrix> brc_residuals(const ROperator &r, const TraceForm &tf);

// Tr(C X) for an N x N matrix over any ring accepting QScalar coefficients.
template <class T, class Mul>
T r_trace(const TraceForm &tf, const std::vector<std::vector<T>> &x, Mul mul) {
  int n = tf.c.rows();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("r_trace: dimension mismatch");
  T acc{};
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(x[i].size()) != n) throw std::invalid_argument("r_trace: dimension mismatch");
    for (int j = 0; j < n; ++j)
      if (!tf.c(i, j).is_zero()) acc += mul(tf.c(i, j), x[j][i]);
  }
  return acc;
}
QScalar r_trace(const TraceForm &tf, const QMatrix &x);

std::pair<ROperator, ROperator> compat_residual(const ROperator &r, const ROperator &f);
std::pair<ROperator, ROperator> quad_projectors(const ROperator &r);
std::vector<ROperator> antisym_tower(const ROperator &r, int kmax);

class NotGLType : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

int gl_type(const ROperator &r, int mmax);

// Text format: "N k" line, then N^k x N^k whitespace-separated entries.
std::string write_rmatrix(const ROperator &r);
ROperator read_rmatrix(const std::string &text);

// Validates YBE and Hecke (with deformation q, else 1) for externally
// supplied matrices; throws with the offending residual entry otherwise.
ROperator validated(ROperator r);

} // namespace recalc

#endif
