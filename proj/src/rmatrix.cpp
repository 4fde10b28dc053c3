#include "recalc/rmatrix.hpp"

#include <sstream>

namespace recalc {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int flat_index(const std::vector<int> &idx, int N) {
  int f = 0;
  for (int i : idx) f = f * N + i;
  return f;
}

std::vector<int> multi_index(int flat, int N, int k) {
  std::vector<int> idx(k);
  for (int p = k - 1; p >= 0; --p) {
    idx[p] = flat % N;
    flat /= N;
  }
  return idx;
}

QScalar ROperator::at(std::initializer_list<int> row, std::initializer_list<int> col) const {
  int r = 0, c = 0;
  for (int i : row) r = r * N + (i - 1);
  for (int j : col) c = c * N + (j - 1);
  return m(r, c);
}

ROperator identity_op(int N, int arity, const QScalar &deform) {
  return ROperator{N, arity, QMatrix::identity(ipow(N, arity)), deform};
}

ROperator make_flip(int N) {
  if (N < 2) throw std::invalid_argument("make_flip: N must be at least 2");
  ROperator p{N, 2, QMatrix(N * N, N * N), QScalar(1)};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) p.m(i * N + j, j * N + i) = QScalar(1);
  return p;
}

ROperator make_dj(int N) {
  if (N < 2) throw std::invalid_argument("make_dj: N must be at least 2");
  ROperator r{N, 2, QMatrix(N * N, N * N), QScalar::q()};
  for (int i = 0; i < N; ++i) {
    r.m(i * N + i, i * N + i) = QScalar::q();
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      r.m(i * N + j, j * N + i) = QScalar(1);
      if (i < j) r.m(i * N + j, i * N + j) = q_lambda();
    }
  }
  return r;
}

ROperator lift(const ROperator &x, int position, int total) {
  if (position < 1 || position + x.arity - 1 > total)
    throw std::out_of_range("lift: position " + std::to_string(position) + " out of range for arity " +
                            std::to_string(x.arity) + " in " + std::to_string(total) + " factors");
  QMatrix m = QMatrix::identity(ipow(x.N, position - 1)).kron(x.m);
  m = m.kron(QMatrix::identity(ipow(x.N, total - position - x.arity + 1)));
  return ROperator{x.N, total, std::move(m), x.deform};
}

namespace {

void check_compatible(const ROperator &a, const ROperator &b) {
  if (a.N != b.N || a.arity != b.arity) throw std::invalid_argument("operator shape mismatch");
}

} // namespace

ROperator op_mul(const ROperator &a, const ROperator &b) {
  check_compatible(a, b);
  return ROperator{a.N, a.arity, a.m * b.m, a.deform};
}

ROperator op_sub(const ROperator &a, const ROperator &b) {
  check_compatible(a, b);
  return ROperator{a.N, a.arity, a.m - b.m, a.deform};
}

ROperator op_scale(const QScalar &s, const ROperator &a) {
  return ROperator{a.N, a.arity, s * a.m, a.deform};
}

ROperator op_inverse(const ROperator &a) {
  return ROperator{a.N, a.arity, inverse(a.m), a.deform};
}

ROperator change_basis(const ROperator &r, const QMatrix &g) {
  QMatrix gg = g.kron(g);
  return ROperator{r.N, r.arity, gg * r.m * inverse(gg), r.deform};
}

QScalar v_int(const QScalar &v, int k) {
  if (v.is_one()) return QScalar(k);
  if (v == QScalar::q()) return q_int(k);
  QScalar acc;
  int a = k < 0 ? -k : k;
  for (int j = 0; j < a; ++j) acc += v.pow(a - 1 - 2 * j);
  return k < 0 ? -acc : acc;
}

ROperator ybe_residual(const ROperator &r) {
  if (r.arity != 2) throw std::invalid_argument("ybe_residual: arity 2 required");
  ROperator r1 = lift(r, 1, 3), r2 = lift(r, 2, 3);
  return op_sub(op_mul(op_mul(r1, r2), r1), op_mul(op_mul(r2, r1), r2));
}

ROperator hecke_residual(const ROperator &r) {
  if (r.arity != 2) throw std::invalid_argument("hecke_residual: arity 2 required");
  ROperator id = identity_op(r.N, 2, r.deform);
  return op_mul(op_sub(r, op_scale(r.deform, id)), op_sub(r, op_scale(-r.deform.inverse(), id)));
}

namespace {

// Both contractions of the skew-inverse definition, as N^2 x N^2 matrices
// indexed by (i1 i3 ; j1 j3).
std::pair<QMatrix, QMatrix> contractions(const ROperator &r, const ROperator &psi) {
  int N = r.N;
  QMatrix c1(N * N, N * N), c2(N * N, N * N);
  for (int i1 = 0; i1 < N; ++i1)
    for (int i3 = 0; i3 < N; ++i3)
      for (int j1 = 0; j1 < N; ++j1)
        for (int j3 = 0; j3 < N; ++j3) {
          QScalar a, b;
          for (int s = 0; s < N; ++s)
            for (int k = 0; k < N; ++k) {
              const QScalar &rx = r.m(i1 * N + s, j1 * N + k);
              if (!rx.is_zero()) a += rx * psi.m(k * N + i3, s * N + j3);
              const QScalar &px = psi.m(i1 * N + s, j1 * N + k);
              if (!px.is_zero()) b += px * r.m(k * N + i3, s * N + j3);
            }
          c1(i1 * N + i3, j1 * N + j3) = a;
          c2(i1 * N + i3, j1 * N + j3) = b;
        }
  return {c1, c2};
}

} // namespace

ROperator skew_inverse(const ROperator &r) {
  if (r.arity != 2) throw std::invalid_argument("skew_inverse: arity 2 required");
  int N = r.N;
  int n4 = N * N * N * N;
  auto unknown = [N](int a, int b, int c, int d) { return ((a * N + b) * N + c) * N + d; };
  QMatrix sys(2 * n4, n4 + 1);
  int row = 0;
  for (int pass = 0; pass < 2; ++pass)
    for (int i1 = 0; i1 < N; ++i1)
      for (int i3 = 0; i3 < N; ++i3)
        for (int j1 = 0; j1 < N; ++j1)
          for (int j3 = 0; j3 < N; ++j3, ++row) {
            for (int s = 0; s < N; ++s)
              for (int k = 0; k < N; ++k) {
                if (pass == 0) {
                  const QScalar &rx = r.m(i1 * N + s, j1 * N + k);
                  if (!rx.is_zero()) sys(row, unknown(k, i3, s, j3)) += rx;
                } else {
                  const QScalar &rx = r.m(k * N + i3, s * N + j3);
                  if (!rx.is_zero()) sys(row, unknown(i1, s, j1, k)) += rx;
                }
              }
            if (i1 == j3 && i3 == j1) sys(row, n4) = QScalar(1);
          }
  auto piv = rref(sys);
  int rk = static_cast<int>(piv.size());
  bool inconsistent = !piv.empty() && piv.back() == n4;
  if (inconsistent) --rk;
  if (inconsistent || rk < n4) {
    throw NotSkewInvertible(std::string("not skew-invertible: ") +
                                (inconsistent ? "defining system is inconsistent"
                                              : "defining system is underdetermined") +
                                ", rank defect " + std::to_string(n4 - rk),
                            n4 - rk);
  }
  ROperator psi{N, 2, QMatrix(N * N, N * N), r.deform};
  for (int i = 0; i < n4; ++i) {
    auto idx = multi_index(i, N, 4);
    psi.m(idx[0] * N + idx[1], idx[2] * N + idx[3]) = sys(i, n4);
  }
  return psi;
}

std::pair<QMatrix, QMatrix> skew_inverse_residuals(const ROperator &r, const ROperator &psi) {
  auto [c1, c2] = contractions(r, psi);
  QMatrix p13 = make_flip(r.N).m;
  return {c1 - p13, c2 - p13};
}

TraceForm bc_operators(const ROperator &r, const ROperator &psi) {
  int N = r.N;
  TraceForm tf{QMatrix(N, N), QMatrix(N, N), 0};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int s = 0; s < N; ++s) {
        tf.b(i, j) += psi.m(s * N + i, s * N + j);
        tf.c(i, j) += psi.m(i * N + s, j * N + s);
      }
  if (rank(tf.b) < N || rank(tf.c) < N) throw NotSkewInvertible("not strictly skew-invertible", 0);
  auto [b1, b2] = brc_residuals(r, tf);
  if (!b1.is_zero() || !b2.is_zero())
    throw NotSkewInvertible("B/C operators violate the trace identities", 0);
  return tf;
}

std::pair<QMatrix, QMatrix> brc_residuals(const ROperator &r, const TraceForm &tf) {
  int N = r.N;
  QMatrix rb(N, N), rc(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      QScalar a, b;
      for (int s = 0; s < N; ++s)
        for (int k = 0; k < N; ++k) {
          if (!tf.b(s, k).is_zero()) a += tf.b(s, k) * r.m(k * N + i, s * N + j);
          if (!tf.c(s, k).is_zero()) b += tf.c(s, k) * r.m(i * N + k, j * N + s);
        }
      rb(i, j) = a;
      rc(i, j) = b;
    }
  QMatrix id = QMatrix::identity(N);
  return {rb - id, rc - id};
}

QScalar r_trace(const TraceForm &tf, const QMatrix &x) {
  if (x.rows() != tf.c.rows() || x.cols() != tf.c.cols())
    throw std::invalid_argument("r_trace: dimension mismatch");
  QScalar acc;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (!tf.c(i, j).is_zero()) acc += tf.c(i, j) * x(j, i);
  return acc;
}

std::pair<ROperator, ROperator> compat_residual(const ROperator &r, const ROperator &f) {
  if (r.arity != 2 || f.arity != 2 || r.N != f.N)
    throw std::invalid_argument("compat_residual: two arity-2 operators on the same space required");
  ROperator r1 = lift(r, 1, 3), r2 = lift(r, 2, 3), f1 = lift(f, 1, 3), f2 = lift(f, 2, 3);
  ROperator a = op_sub(op_mul(op_mul(r1, f2), f1), op_mul(op_mul(f2, f1), r2));
  ROperator b = op_sub(op_mul(op_mul(f1, f2), r1), op_mul(op_mul(r2, f1), f2));
  return {a, b};
}

std::pair<ROperator, ROperator> quad_projectors(const ROperator &r) {
  QScalar two = v_int(r.deform, 2);
  if (two.is_zero()) throw std::domain_error("quad_projectors: 2_q vanishes");
  ROperator id = identity_op(r.N, 2, r.deform);
  ROperator a = op_scale(two.inverse(), op_sub(op_scale(r.deform, id), r));
  ROperator s = op_scale(two.inverse(), op_sub(r, op_scale(-r.deform.inverse(), id)));
  return {a, s};
}

std::vector<ROperator> antisym_tower(const ROperator &r, int kmax) {
  std::vector<ROperator> out;
  if (kmax < 1) return out;
  out.push_back(identity_op(r.N, 1, r.deform));
  for (int k = 2; k <= kmax; ++k) {
    QScalar kq = v_int(r.deform, k);
    if (kq.is_zero()) throw std::domain_error("antisym_tower: " + std::to_string(k) + "_q vanishes");
    ROperator prev = lift(out.back(), 1, k);
    ROperator mid = op_sub(op_scale(r.deform.pow(k - 1), identity_op(r.N, k, r.deform)),
                           op_scale(v_int(r.deform, k - 1), lift(r, k - 1, k)));
    out.push_back(op_scale(kq.inverse(), op_mul(op_mul(prev, mid), prev)));
  }
  return out;
}

int gl_type(const ROperator &r, int mmax) {
  auto tower = antisym_tower(r, mmax + 1);
  for (int m = 1; m <= mmax; ++m) {
    if (rank(tower[m - 1].m) != 1 || !tower[m].m.is_zero()) continue;
    TraceForm tf = bc_operators(r, skew_inverse(r));
    QMatrix expect = r.deform.pow(-2 * m) * QMatrix::identity(r.N);
    if (!(tf.b * tf.c == expect))
      throw NotGLType("rank signature gives m = " + std::to_string(m) + " but B*C != q^(-2m) I");
    return m;
  }
  throw NotGLType("not GL-type: no m <= " + std::to_string(mmax) + " with rank A_m = 1 and A_{m+1} = 0");
}

std::string write_rmatrix(const ROperator &r) {
  std::ostringstream os;
  os << r.N << " " << r.arity << "\n";
  for (int i = 0; i < r.side(); ++i) {
    for (int j = 0; j < r.side(); ++j) os << (j ? " " : "") << r.m(i, j).str(true);
    os << "\n";
  }
  return os.str();
}

ROperator read_rmatrix(const std::string &text) {
  std::istringstream is(text);
  int N = 0, k = 0;
  if (!(is >> N >> k) || N < 2 || k < 1) throw std::invalid_argument("R-matrix file: bad header");
  ROperator r{N, k, QMatrix(ipow(N, k), ipow(N, k)), QScalar::q()};
  for (int i = 0; i < r.side(); ++i)
    for (int j = 0; j < r.side(); ++j) {
      std::string tok;
      if (!(is >> tok))
        throw std::invalid_argument("R-matrix file: expected " + std::to_string(r.side() * r.side()) +
                                    " entries");
      r.m(i, j) = QScalar::parse(tok);
    }
  std::string extra;
  if (is >> extra) throw std::invalid_argument("R-matrix file: trailing data '" + extra + "'");
  return r;
}

ROperator validated(ROperator r) {
  if (r.arity != 2) throw std::invalid_argument("R-matrix must have arity 2");
  ROperator y = ybe_residual(r);
  for (int i = 0; i < y.side(); ++i)
    for (int j = 0; j < y.side(); ++j)
      if (!y.m(i, j).is_zero())
        throw std::invalid_argument("R-matrix fails Yang-Baxter: residual entry (" + std::to_string(i) +
                                    "," + std::to_string(j) + ") = " + y.m(i, j).str());
  for (const QScalar &v : {QScalar::q(), QScalar(1)}) {
    r.deform = v;
    if (hecke_residual(r).m.is_zero()) return r;
  }
  throw std::invalid_argument("R-matrix is not of Hecke type for q or at q = 1");
}

} // namespace recalc
