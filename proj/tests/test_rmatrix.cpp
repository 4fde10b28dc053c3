#include "doctest.h"
#include "recalc/rmatrix.hpp"

#include <random>

using namespace recalc;

namespace {

QScalar q(int e = 1) { return QScalar::q(e); }

bool is_zero_op(const ROperator &x) { return x.m.is_zero(); }

ROperator diag_op(std::vector<QScalar> d) {
  int N = 2;
  ROperator r{N, 2, QMatrix(4, 4), q()};
  for (int i = 0; i < 4; ++i) r.m(i, i) = d[i];
  return r;
}

} // namespace

TEST_CASE("flip and Drinfeld-Jimbo constructors") {
  ROperator p = make_flip(2);
  CHECK(p.at({1, 1}, {1, 1}) == QScalar(1));
  CHECK(p.at({1, 2}, {2, 1}) == QScalar(1));
  CHECK(p.at({2, 1}, {1, 2}) == QScalar(1));
  CHECK(p.at({2, 2}, {2, 2}) == QScalar(1));
  CHECK(p.at({1, 2}, {1, 2}).is_zero());
  CHECK(op_mul(p, p).m == QMatrix::identity(4));
  CHECK(is_zero_op(hecke_residual(make_flip(3))));

  ROperator r = make_dj(2);
  QScalar lam = q() - q(-1);
  std::vector<std::vector<QScalar>> expect = {
      {q(), 0, 0, 0}, {0, lam, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, q()}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(r.m(i, j) == expect[i][j]);
  ROperator p2 = make_flip(2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(QScalar(qs_eval(r.m(i, j), Rational(1))) == p2.m(i, j));
}

TEST_CASE("lift") {
  ROperator id1 = identity_op(2, 1);
  CHECK(lift(id1, 1, 3).m == QMatrix::identity(8));
  ROperator r = make_dj(2);
  ROperator r1 = lift(r, 1, 4), r3 = lift(r, 3, 4);
  CHECK(op_mul(r1, r3).m == op_mul(r3, r1).m);
  // independent Kronecker product: (I (x) R)_{(a,b,c),(d,e,f)} = delta_ad R_{bc,ef}
  ROperator l = lift(r, 2, 3);
  for (int row = 0; row < 8; ++row)
    for (int col = 0; col < 8; ++col) {
      int a = row / 4, bc = row % 4, d = col / 4, ef = col % 4;
      QScalar e = a == d ? r.m(bc, ef) : QScalar();
      CHECK(l.m(row, col) == e);
    }
  CHECK_THROWS_AS(lift(r, 3, 3), std::out_of_range);
}

TEST_CASE("Yang-Baxter and Hecke") {
  CHECK(is_zero_op(ybe_residual(make_dj(2))));
  CHECK(is_zero_op(ybe_residual(make_dj(3))));
  CHECK(is_zero_op(ybe_residual(make_flip(2))));
  CHECK_FALSE(is_zero_op(ybe_residual(diag_op({1, 1, 1, 2}))));
  CHECK(is_zero_op(hecke_residual(make_dj(2))));
  CHECK(is_zero_op(hecke_residual(make_dj(3))));
  CHECK_FALSE(is_zero_op(hecke_residual(op_scale(QScalar(2), make_flip(2)))));
}

TEST_CASE("skew-inverse and B/C operators") {
  ROperator p = make_flip(2);
  ROperator psi_p = skew_inverse(p);
  CHECK(psi_p.m == p.m);
  TraceForm tfp = bc_operators(p, psi_p);
  CHECK(tfp.b == QMatrix::identity(2));
  CHECK(tfp.c == QMatrix::identity(2));

  for (int N : {2, 3}) {
    ROperator r = make_dj(N);
    ROperator psi = skew_inverse(r);
    auto [c1, c2] = skew_inverse_residuals(r, psi);
    CHECK(c1.is_zero());
    CHECK(c2.is_zero());
    TraceForm tf = bc_operators(r, psi);
    auto [b1, b2] = brc_residuals(r, tf);
    CHECK(b1.is_zero());
    CHECK(b2.is_zero());
    CHECK(tf.b * tf.c == q(-2 * N) * QMatrix::identity(N));
  }
  TraceForm tf = bc_operators(make_dj(2), skew_inverse(make_dj(2)));
  CHECK(r_trace(tf, QMatrix::identity(2)) == q(-1) + q(-3));
  CHECK(r_trace(tf, QMatrix::identity(2)) == q(-2) * q_int(2));
  QMatrix x(2, 2), y(2, 2);
  x(0, 1) = q();
  x(1, 1) = QScalar(3);
  y(0, 0) = QScalar(2);
  y(1, 0) = q(-2);
  QScalar a = q(2) + QScalar(1), b = QScalar(-5);
  CHECK(r_trace(tf, a * x + b * y) == a * r_trace(tf, x) + b * r_trace(tf, y));

  ROperator proj{2, 2, QMatrix(4, 4), q()};
  proj.m(0, 0) = QScalar(1);
  CHECK_THROWS_AS(skew_inverse(proj), NotSkewInvertible);
}

TEST_CASE("compatible pairs") {
  ROperator r = make_dj(2);
  auto [a, b] = compat_residual(r, r);
  CHECK(is_zero_op(a));
  CHECK(is_zero_op(b));
  auto [c, d] = compat_residual(r, make_flip(2));
  CHECK(is_zero_op(c));
  CHECK(is_zero_op(d));
  auto [e, f] = compat_residual(r, diag_op({1, 2, 3, 4}));
  CHECK_FALSE((is_zero_op(e) && is_zero_op(f)));
}

TEST_CASE("projectors and the antisymmetrizer tower") {
  auto [a2, s2] = quad_projectors(make_flip(2));
  ROperator p = make_flip(2);
  CHECK(a2.m == Rational(1, 2) * (QMatrix::identity(4) - p.m));
  CHECK(s2.m == Rational(1, 2) * (QMatrix::identity(4) + p.m));

  auto [A, S] = quad_projectors(make_dj(2));
  CHECK(rank(A.m) == 1);
  CHECK(rank(S.m) == 3);
  CHECK(A.m + S.m == QMatrix::identity(4));
  CHECK((A.m * S.m).is_zero());
  auto [A3, S3] = quad_projectors(make_dj(3));
  CHECK(A3.m * A3.m == A3.m);

  auto t2 = antisym_tower(make_dj(2), 3);
  CHECK(t2[1].m == A.m);
  CHECK(rank(t2[1].m) == 1);
  CHECK(t2[2].m.is_zero());
  auto t3 = antisym_tower(make_dj(3), 4);
  CHECK(rank(t3[2].m) == 1);
  CHECK(t3[3].m.is_zero());
  for (int k = 1; k <= 3; ++k) {
    CHECK(t3[k - 1].m * t3[k - 1].m == t3[k - 1].m);
    if (k > 1) CHECK(t3[k - 1].m * lift(t3[k - 2], 1, k).m == t3[k - 1].m);
  }
}

TEST_CASE("GL-type detection") {
  CHECK(gl_type(make_dj(2), 3) == 2);
  CHECK(gl_type(make_dj(3), 3) == 3);
  CHECK(gl_type(make_flip(2), 3) == 2);
  CHECK_THROWS_AS(gl_type(make_dj(3), 2), NotGLType);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 3; ++trial) {
    QMatrix g(2, 2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g(i, j) = QScalar(d(rng));
    } while (rank(g) < 2);
    ROperator r = change_basis(make_dj(2), g);
    CHECK(is_zero_op(ybe_residual(r)));
    CHECK(gl_type(r, 3) == 2);
  }
}

TEST_CASE("R-matrix file format round trip") {
  for (const ROperator &r : {make_dj(2), make_dj(3), make_flip(2)}) {
    std::string text = write_rmatrix(r);
    ROperator back = validated(read_rmatrix(text));
    CHECK(back.m == r.m);
    CHECK(back.deform == r.deform);
    CHECK(write_rmatrix(back) == text);
  }
  CHECK_THROWS(validated(read_rmatrix("2 2\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 2\n")));
  CHECK_THROWS(read_rmatrix("2 2\n1 0 0\n"));
}
