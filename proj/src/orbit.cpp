#include "recalc/bdalg.hpp"

#include <stdexcept>

namespace recalc {

OrbitSpec sphere_orbit(const Coeff &r) {
  Coeff two_q = Coeff(q_int(2));
  return OrbitSpec{{Coeff(), Coeff(-1) * two_q * Coeff::q(-2) * r * r}};
}

NCPoly r_trace_poly(const TraceForm &tf, const PolyMatrix &x) {
  return r_trace(tf, x, [](const QScalar &c, const NCPoly &e) { return Coeff(c) * e; });
}

std::vector<NCPoly> trace_property_residual(const ROperator &R) {
  TraceForm tf = bc_operators(R, skew_inverse(R));
  SlotMatrix X1 = SlotMatrix::generator(GenClass::K, R.N, 1, 2);
  SlotMatrix R1 = SlotMatrix::from_op(R, 1, 2), R1i = SlotMatrix::from_op(op_inverse(R), 1, 2);
  NCPoly tr = r_trace_poly(tf, generating_matrix(GenClass::K, R.N));
  std::vector<NCPoly> out;
  for (const SlotMatrix &conj : {R1 * X1 * R1i, R1i * X1 * R1}) {
    PolyMatrix d = conj.r_trace(tf.c, 2).as_square(1);
    for (int i = 0; i < R.N; ++i)
      for (int j = 0; j < R.N; ++j) out.push_back(i == j ? d[i][j] - tr : d[i][j]);
  }
  return out;
}

PolyMatrix orbit_inverse(const BDPresentation &P, const OrbitSpec &spec) {
  if (P.m != 2 || spec.c.size() < 2) throw std::invalid_argument("orbit inverse implemented for GL(2) orbits");
  Coeff v(P.R.deform);
  Coeff a1 = spec.c[0];
  Coeff a2 = Coeff(q_int(2)).inverse() * (v * spec.c[0] * spec.c[0] - spec.c[1]);
  Coeff s = v * v * a2;
  if (s.is_zero() || !s.is_unit()) throw PresentationError("a_2(M) = " + a2.str() + " is not invertible on the orbit");
  Coeff k = Coeff(-1) * s.inverse();
  PolyMatrix inv = generating_matrix(GenClass::M, P.N);
  for (int i = 0; i < P.N; ++i)
    for (int j = 0; j < P.N; ++j) {
      inv[i][j] = k * inv[i][j];
      if (i == j) inv[i][j] += NCPoly(Coeff(-1) * k * v * a1);
    }
  return inv;
}

BDPresentation orbit_quotient(const BDPresentation &P, const OrbitSpec &spec) {
  if (!P.fn_part || P.fn_cls != GenClass::M || P.flavor != Flavor::adjoint)
    throw std::invalid_argument("orbit quotient needs an adjoint algebra over M");
  if (static_cast<int>(spec.c.size()) != P.m) throw std::invalid_argument("orbit needs c_1..c_m");
  BDPresentation out = P;
  out.completion_len = 3;
  for (int k = 1; k <= P.m; ++k) out.fn_relations.push_back(power_sum(*P.fn_part, k) - NCPoly(spec.c[k - 1]));
  out.rebuild();
  if (P.m == 2) {
    PolyMatrix minv = orbit_inverse(P, spec);
    NCPoly restriction = r_trace_poly(P.trace_form(), poly_mul(minv, generating_matrix(P.op_cls, P.N)));
    // act in the unrestricted algebra, then specialize on the orbit
    NCPoly value = out.fn_nf->normal_form(act(P, NCPoly(1), restriction));
    out.extra_relations.push_back(restriction - value);
    out.rebuild();
  }
  return out;
}

namespace {

StageResult stage(const std::string &name, const std::vector<NCPoly> &residuals) {
  StageResult s{name, true, ""};
  for (const auto &r : residuals)
    if (!r.is_zero()) {
      s.pass = false;
      s.witness = r.str();
      break;
    }
  return s;
}

} // namespace

std::vector<StageResult> gl2_sphere(const ROperator &R, const Coeff &r, const Coeff &xi) {
  std::vector<StageResult> out;
  BDPresentation B = bd_adjoint(R, GenClass::Q, xi);
  if (B.m != 2 || B.N != 2) throw std::invalid_argument("the sphere example needs N = m = 2");
  OrbitSpec spec = sphere_orbit(r);
  Coeff v(R.deform);

  std::vector<NCPoly> central;
  for (int k = 1; k <= 2; ++k) {
    NCPoly t = power_sum(*B.fn_part, k);
    for (Letter g : B.letters()) {
      NCPoly gw = NCPoly::word(Word(1, g));
      central.push_back(B.normal_form(t * gw - gw * t));
    }
  }
  out.push_back(stage("traces of M central", central));
  out.push_back(stage("trace property", trace_property_residual(R)));

  BDPresentation O = orbit_quotient(B, spec);
  PolyMatrix minv = orbit_inverse(B, spec);
  PolyMatrix M = generating_matrix(GenClass::M, 2);
  std::vector<NCPoly> inv_res;
  Coeff c = Coeff(-1) * (r * r).inverse();
  for (const PolyMatrix &prod : {poly_mul(M, minv), poly_mul(minv, M)})
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) inv_res.push_back(O.fn_nf->normal_form(prod[i][j] - NCPoly(i == j ? 1 : 0)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) inv_res.push_back(minv[i][j] - c * M[i][j]);
  out.push_back(stage("inverse M^-1 = c M on the orbit", inv_res));

  // Tr_R(M^-1 Q |>) is the scalar xi Tr_R(M^-1) on degree one
  BDPresentation X = extend_with_inverses(B, {GenClass::M});
  PolyMatrix gen_inv = inverse_matrix(X, GenClass::M);
  NCPoly scalar = xi * r_trace_poly(B.trace_form(), gen_inv);
  std::vector<NCPoly> scal_res;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      NCPoly f = NCPoly::gen(GenClass::M, i, j);
      NCPoly lhs;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          QScalar cab = B.trace_form().c(a, b);
          if (cab.is_zero()) continue;
          for (int cc = 0; cc < 2; ++cc)
            lhs += Coeff(cab) * gen_inv[b][cc] * act(B, NCPoly::gen(GenClass::Q, cc + 1, a + 1), f);
        }
      scal_res.push_back(cleared_residual(X, lhs - scalar * f));
    }
  out.push_back(stage("Tr_R(M^-1 Q) scalar on degree one", scal_res));

  NCPoly restriction = r_trace_poly(B.trace_form(), poly_mul(minv, generating_matrix(GenClass::Q, 2)));
  NCPoly value = O.fn_nf->normal_form(act(B, NCPoly(1), restriction));
  out.push_back(stage("Tr_R(M^-1 Q) restricted to the orbit", {value}));

  // Q = I - (q - q^-1) K  =>  K = (I - Q) / (q - q^-1)
  Coeff lam_inv = (v - v.inverse()).inverse();
  PolyMatrix K(2, std::vector<NCPoly>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      K[i][j] = lam_inv * (NCPoly(i == j ? 1 : 0) - NCPoly::gen(GenClass::Q, i + 1, j + 1));
  out.push_back(stage("Tr_R(M K) restricted", {O.normal_form(r_trace_poly(B.trace_form(), poly_mul(M, K)))}));

  std::vector<NCPoly> conf;
  for (const auto &w : confluence_residuals(*O.system)) conf.push_back(w.difference);
  out.push_back(stage("restricted system confluent (degree 3)", conf));
  return out;
}

} // namespace recalc
