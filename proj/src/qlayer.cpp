#include "recalc/bdalg.hpp"

#include <stdexcept>

namespace recalc {

SlotMatrix matrix_copy_under(const ROperator &R, GenClass cls, int k, int slots) {
  SlotMatrix x = SlotMatrix::generator(cls, R.N, 1, slots);
  if (k > 1) {
    ROperator rinv = op_inverse(R);
    for (int j = 1; j < k; ++j) x = SlotMatrix::from_op(rinv, j, slots) * x * SlotMatrix::from_op(R, j, slots);
  }
  return x;
}

namespace {

PolyMatrix nf_mul(const BDPresentation &P, const PolyMatrix &a, const PolyMatrix &b) {
  return P.normal_form(poly_mul(a, b));
}

} // namespace

QNMatrices qn_matrices(const BDPresentation &P) {
  if (P.flavor != Flavor::right_invariant || !(P.F == P.R))
    throw std::invalid_argument("Q and N need the right-invariant algebra with F = R");
  if (!P.inverses.count(GenClass::M) || !P.inverses.count(GenClass::L))
    throw std::invalid_argument("Q and N need the inverses of M and L adjoined");
  QNMatrices out;
  out.Minv = inverse_matrix(P, GenClass::M);
  PolyMatrix Linv = inverse_matrix(P, GenClass::L);
  PolyMatrix L = generating_matrix(GenClass::L, P.N), M = generating_matrix(GenClass::M, P.N);
  out.Q = nf_mul(P, nf_mul(P, nf_mul(P, L, out.Minv), Linv), M);
  out.Nm = nf_mul(P, out.Minv, out.Q);
  return out;
}

namespace {

NamedResidual check_identity(const BDPresentation &P, const std::string &name, const SlotMatrix &lhs,
                             const SlotMatrix &rhs) {
  NamedResidual r{name, {}, false};
  try {
    for (const NCPoly &e : (lhs - rhs).relations()) {
      NCPoly c = cleared_residual(P, e);
      if (!c.is_zero()) r.nonzero.push_back(c);
    }
  } catch (const BudgetExceeded &) {
    r.budget_exhausted = true;
  }
  return r;
}

} // namespace

std::vector<NamedResidual> prop_qm_residual(const BDPresentation &P, const QNMatrices &qn) {
  SlotMatrix R1 = SlotMatrix::from_op(P.R, 1, 2), R1i = SlotMatrix::from_op(op_inverse(P.R), 1, 2);
  SlotMatrix M1 = SlotMatrix::generator(GenClass::M, P.N, 1, 2);
  SlotMatrix Q1 = SlotMatrix::from_polys(qn.Q, 1, 2), N1 = SlotMatrix::from_polys(qn.Nm, 1, 2);
  std::vector<NamedResidual> out;
  NamedResidual mm = check_identity(P, "M-M", R1 * M1 * R1 * M1, M1 * R1 * M1 * R1);
  out.push_back(mm);
  out.push_back(check_identity(P, "Q-M", R1 * Q1 * R1 * M1, M1 * R1 * Q1 * R1));
  out.push_back(check_identity(P, "Q-Q", R1 * Q1 * R1 * Q1, Q1 * R1 * Q1 * R1));
  mm.name = "M-M (N pair)";
  out.push_back(mm);
  out.push_back(check_identity(P, "N-M", R1i * N1 * R1 * M1, M1 * R1i * N1 * R1));
  out.push_back(check_identity(P, "N-N", R1 * N1 * R1 * N1, N1 * R1 * N1 * R1));
  return out;
}

Coeff expected_xi(const BDPresentation &P) { return P.eta.inverse() * Coeff(P.R.deform).pow(2 * P.m); }

PolyMatrix q_unit_action(const BDPresentation &P, const QNMatrices &qn) {
  Coeff xi = expected_xi(P);
  PolyMatrix out(P.N, std::vector<NCPoly>(P.N));
  for (int i = 0; i < P.N; ++i)
    for (int j = 0; j < P.N; ++j) {
      NCPoly v = act(P, qn.Q[i][j], NCPoly(1));
      if (i == j) v -= NCPoly(xi);
      out[i][j] = cleared_residual(P, v);
    }
  return out;
}

std::vector<NCPoly> q_action_residual(const BDPresentation &P, int k, int p, const PolyMatrix *Q, const Coeff &xi,
                                      bool printed_order) {
  if (k < 0 || p < 0) throw std::out_of_range("q_action_residual: negative order");
  int slots = std::max(1, k + p);
  SlotMatrix lhs = SlotMatrix::identity(P.N, slots);
  if (k > 0) {
    SlotMatrix q = Q ? SlotMatrix::from_polys(*Q, 1, slots) : SlotMatrix::generator(P.op_cls, P.N, 1, slots);
    lhs = q;
    ROperator rinv = op_inverse(P.R);
    for (int j = 2; j <= k; ++j) {
      q = SlotMatrix::from_op(P.R, j - 1, slots) * q * SlotMatrix::from_op(rinv, j - 1, slots);
      lhs = lhs * q;
    }
  }
  SlotMatrix over = SlotMatrix::identity(P.N, slots), under = SlotMatrix::identity(P.N, slots);
  for (int j = k + 1; j <= k + p; ++j) {
    over = over * matrix_copy(P.R, GenClass::M, j, slots);
    SlotMatrix u = matrix_copy_under(P.R, GenClass::M, j, slots);
    under = printed_order ? under * u : u * under;
  }
  lhs = lhs * over;
  SlotMatrix rhs = k == 0 ? over : xi.pow(k) * under;
  std::vector<NCPoly> out;
  SlotMatrix diff = lhs.map([&](const NCPoly &e) { return act(P, NCPoly(1), e); }) - rhs;
  for (const NCPoly &e : diff.relations()) {
    NCPoly r = cleared_residual(P, e);
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

} // namespace recalc
