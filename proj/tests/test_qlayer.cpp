#include "doctest.h"

#include "recalc/bdalg.hpp"

using namespace recalc;

namespace {

Coeff eta() { return Coeff::param(Param::eta); }

struct QLayer {
  BDPresentation X;
  QNMatrices qn;
};

const QLayer &qlayer() {
  static const QLayer q = [] {
    BDPresentation X = extend_with_inverses(bd_right_invariant(make_dj(2), make_dj(2), eta()), {GenClass::M, GenClass::L});
    QNMatrices qn = qn_matrices(X);
    return QLayer{std::move(X), std::move(qn)};
  }();
  return q;
}

int nonzero_count(const BDPresentation &P, const SlotMatrix &diff) {
  int n = 0;
  for (const NCPoly &e : diff.relations())
    if (!cleared_residual(P, e).is_zero()) ++n;
  return n;
}

} // namespace

TEST_CASE("completion adds the consequences of overlaps") {
  NCPoly a = NCPoly::gen(GenClass::x, 1), b = NCPoly::gen(GenClass::x, 2);
  RewriteSystem sys = complete_system({a * b - a, b * a - b});
  Normalizer nf(std::make_shared<const RewriteSystem>(sys));
  CHECK(nf.normal_form(a * a) == a);
  CHECK(nf.normal_form(b * b) == b);
  CHECK(confluence_residuals(sys).empty());
  CHECK_THROWS_AS(complete_system({a - NCPoly(1), a - NCPoly(2)}), PresentationError);
}

TEST_CASE("inverse-extended right-invariant algebra") {
  const auto &X = qlayer().X;
  CHECK(confluence_residuals(*X.system).empty());
  PolyMatrix M = generating_matrix(GenClass::M, 2), Minv = inverse_matrix(X, GenClass::M);
  PolyMatrix L = generating_matrix(GenClass::L, 2), Linv = inverse_matrix(X, GenClass::L);
  for (const PolyMatrix &prod : {poly_mul(M, Minv), poly_mul(Minv, M), poly_mul(L, Linv), poly_mul(Linv, L)})
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(cleared_residual(X, prod[i][j] - NCPoly(i == j ? 1 : 0)).is_zero());
  // an entry of M alone is not the identity
  CHECK_FALSE(is_zero_in(X, M[0][0] - NCPoly(1)));
  NCPoly parsed = parse_ncpoly("Minv[1,1]", inverse_resolver(X));
  CHECK(X.normal_form(parsed - Minv[0][0]).is_zero());
}

TEST_CASE("Q and N matrices satisfy the reflection-type identities") {
  const auto &[X, qn] = qlayer();
  for (const auto &r : prop_qm_residual(X, qn)) {
    INFO(r.name);
    CHECK_FALSE(r.budget_exhausted);
    CHECK(r.nonzero.empty());
  }
  // the N-M identity with R in place of R^-1 fails
  SlotMatrix R1 = SlotMatrix::from_op(X.R, 1, 2);
  SlotMatrix M1 = SlotMatrix::generator(GenClass::M, 2, 1, 2), N1 = SlotMatrix::from_polys(qn.Nm, 1, 2);
  CHECK(nonzero_count(X, R1 * N1 * R1 * M1 - M1 * R1 * N1 * R1) > 0);
}

TEST_CASE("Q acts on the unit by xi") {
  const auto &[X, qn] = qlayer();
  CHECK(expected_xi(X) == eta().inverse() * Coeff::q(4));
  for (const auto &row : q_unit_action(X, qn))
    for (const auto &e : row) CHECK(e.is_zero());
  BDPresentation Y = X;
  Y.eta = Coeff::q(4);
  CHECK(expected_xi(Y) == Coeff(1));
}

TEST_CASE("Q action on M-polynomials") {
  const auto &[X, qn] = qlayer();
  Coeff xi = expected_xi(X);
  CHECK(q_action_residual(X, 1, 1, &qn.Q, xi).empty());
  CHECK(q_action_residual(X, 1, 2, &qn.Q, xi).empty());
  CHECK(q_action_residual(X, 0, 2, &qn.Q, xi).empty());
  CHECK_FALSE(q_action_residual(X, 1, 1, &qn.Q, Coeff(1)).empty());
  // the underlined copies do not multiply in increasing order
  CHECK_FALSE(q_action_residual(X, 1, 2, &qn.Q, xi, true).empty());
}

TEST_CASE("adjoint L-action on M-polynomials") {
  BDPresentation A = bd_adjoint(make_dj(2));
  for (auto [k, p] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    INFO(k, ",", p);
    CHECK(q_action_residual(A, k, p).empty());
  }
}

TEST_CASE("quantum plane is covariant under the RTT coaction") {
  BDPresentation P = bd_quantum_plane(make_dj(2), eta());
  CHECK(rtt_covariance_residual(P).empty());
  CHECK_FALSE(rtt_covariance_residual(P, true).empty());
}

TEST_CASE("trace property") {
  for (const auto &e : trace_property_residual(make_dj(2))) CHECK(e.is_zero());
  for (const auto &e : trace_property_residual(make_flip(2))) CHECK(e.is_zero());
}

TEST_CASE("sphere orbit") {
  Coeff r = Coeff::param(Param::r);
  OrbitSpec s = sphere_orbit(r);
  REQUIRE(s.c.size() == 2);
  CHECK(s.c[0].is_zero());
  BDPresentation B = bd_adjoint(make_dj(2), GenClass::Q, Coeff::param(Param::xi));
  PolyMatrix inv = orbit_inverse(B, s);
  CHECK(inv[0][0] == Coeff(-1) * (r * r).inverse() * NCPoly::gen(GenClass::M, 1, 1));
  CHECK(inv[0][1] == Coeff(-1) * (r * r).inverse() * NCPoly::gen(GenClass::M, 1, 2));

  for (const auto &st : gl2_sphere(make_dj(2), r, Coeff::param(Param::xi))) {
    INFO(st.name, ": ", st.witness);
    CHECK(st.pass);
  }

  // M times the inverse for a different radius is not the identity on the orbit
  BDPresentation O = orbit_quotient(B, s);
  PolyMatrix wrong = orbit_inverse(B, sphere_orbit(Coeff(2) * r));
  NCPoly e = poly_mul(generating_matrix(GenClass::M, 2), wrong)[0][0] - NCPoly(1);
  CHECK_FALSE(O.fn_nf->normal_form(e).is_zero());
}

TEST_CASE("orbit quotient rejects other flavours") {
  CHECK_THROWS_AS(orbit_quotient(bd_quantum_plane(make_dj(2), eta()), sphere_orbit(Coeff(1))), std::invalid_argument);
}
