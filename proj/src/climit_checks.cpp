#include "recalc/climit.hpp"

namespace recalc {

namespace {

StageResult span_stage(const std::string &name, const std::vector<NCPoly> &got, const std::vector<NCPoly> &target) {
  if (auto extra = outside_span(got, target)) return StageResult{name, false, "extracted, not in target: " + extra->str()};
  if (auto missing = outside_span(target, got)) return StageResult{name, false, "target, not extracted: " + missing->str()};
  return StageResult{name, true, ""};
}

StageResult model_stage(const std::string &name, const OperatorModel &m, const std::vector<std::vector<NCPoly>> &sets) {
  StageResult s{name, true, ""};
  for (const auto &set : sets)
    for (const auto &rel : set) {
      std::string v = model_violation(m, rel);
      if (!v.empty()) return StageResult{name, false, v};
    }
  return s;
}

// First monomial of degree <= 3 on which op does not vanish.
StageResult op_stage(const std::string &name, int nvars, const DiffOp &op) {
  for (const auto &mono : monomials_up_to(nvars, 3)) {
    CPoly f = CPoly::monomial(mono);
    CPoly r = op(f);
    if (!r.is_zero()) return StageResult{name, false, "on " + f.str() + " gives " + r.str()};
  }
  return StageResult{name, true, ""};
}

int eps(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return (j - i + 3) % 3 == 1 ? 1 : -1;
}

std::vector<Letter> letters_of(GenClass c, int N, bool matrix) {
  std::vector<Letter> out;
  for (int i = 1; i <= N; ++i)
    if (matrix)
      for (int j = 1; j <= N; ++j) out.push_back(make_letter(c, i, j));
    else
      out.push_back(make_letter(c, i));
  return out;
}

std::vector<StageResult> su2_stages() {
  std::vector<StageResult> out;
  ROperator R = make_dj(2);
  ClassicalSystem qm = classical_system(bd_adjoint(R, GenClass::Q, Coeff::param(Param::xi)));
  OperatorModel su = su2_model();
  out.push_back(model_stage("model: su(2) fields satisfy the Q/M adjoint limit", su, {qm.op, qm.fn, qm.ofp}));

  std::vector<DiffOp> X;
  std::vector<CPoly> x;
  for (int k = 0; k < 3; ++k) {
    X.push_back(su2_field(k));
    x.push_back(CPoly::var(3, k));
  }
  out.push_back(op_stage("su(2): [x_i, X_j] = -e_ijk x_k", 3, [&](const CPoly &f) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CPoly r = x[i] * X[j](f) - X[j](x[i] * f);
        for (int k = 0; k < 3; ++k) r += Coeff(eps(i, j, k)) * (x[k] * f);
        if (!r.is_zero()) return r;
      }
    return CPoly(3);
  }));
  out.push_back(op_stage("su(2): [X_i, X_j] = -e_ijk X_k for X_i = e_ijk x_j d_k", 3, [&](const CPoly &f) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CPoly r = X[i](X[j](f)) - X[j](X[i](f));
        for (int k = 0; k < 3; ++k) r += Coeff(eps(i, j, k)) * X[k](f);
        if (!r.is_zero()) return r;
      }
    return CPoly(3);
  }));
  out.push_back(op_stage("su(2): x_1 X_1 + x_2 X_2 + x_3 X_3 = 0", 3, [&](const CPoly &f) {
    CPoly r(3);
    for (int i = 0; i < 3; ++i) r += x[i] * X[i](f);
    return r;
  }));
  out.push_back(op_stage("su(2): e_ijk x_i X_j x_k = -2 sum x_i^2", 3, [&](const CPoly &f) {
    CPoly r(3);
    for (int i = 0; i < 3; ++i) {
      r += Coeff(2) * (x[i] * x[i] * f);
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (eps(i, j, k) != 0) r += Coeff(eps(i, j, k)) * (x[i] * X[j](x[k] * f));
    }
    return r;
  }));

  auto M = [](int i, int j) { return NCPoly::gen(GenClass::M, i, j); };
  auto K = [](int i, int j) { return NCPoly::gen(GenClass::K, i, j); };
  NCPoly trmk, trmkm;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      trmk += M(i, j) * K(j, i);
      trmkm -= Coeff(2) * M(i, j) * M(j, i);
      for (int k = 1; k <= 2; ++k) trmkm += M(i, j) * K(j, k) * M(k, i);
    }
  out.push_back(model_stage("su(2): Tr(M K) = 0 and Tr(M K M) = 2 Tr(M^2)", su, {{trmk, trmkm}}));

  // Tr_R(M^2) = c_2 at q = 1 in the compact parameterization
  Coeff r = Coeff::param(Param::r);
  Coeff c2 = sphere_orbit(r).c[1].expand_at_1(0)[0];
  TraceForm tf = bc_operators(R, skew_inverse(R));
  CPoly tr(3);
  std::vector<std::vector<CPoly>> m(2, std::vector<CPoly>(2, CPoly(3)));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) m[i - 1][j - 1] = su.ops.at(make_letter(GenClass::M, i, j))(CPoly::constant(3, 1));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Coeff cab = Coeff(tf.c(a, b)).expand_at_1(0)[0];
      if (cab.is_zero()) continue;
      for (int k = 0; k < 2; ++k) tr += cab * (m[b][k] * m[k][a]);
    }
  CPoly sphere = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - CPoly::constant(3, r * r);
  CPoly diff = (tr - CPoly::constant(3, c2)) - Coeff(-2) * sphere;
  out.push_back(StageResult{"sphere: Tr_R(M^2) = c_2 at q = 1 is x_1^2 + x_2^2 + x_3^2 = r^2", diff.is_zero(),
                            diff.is_zero() ? "" : diff.str()});
  return out;
}

} // namespace

std::vector<StageResult> classical_limit_checks(int N) {
  ROperator R = make_dj(N);
  Coeff eta = Coeff::param(Param::eta);
  ClassicalSystem ad = classical_system(bd_adjoint(R));
  ClassicalSystem pl = classical_system(bd_quantum_plane(R, eta));
  ClassicalSystem ex = classical_system(bd_ext_plane(R, eta));
  std::vector<Letter> xs = letters_of(GenClass::x, N, false), ms = letters_of(GenClass::M, N, true);

  std::vector<StageResult> out;
  out.push_back(span_stage("limit: shifted REA is gl(N)", ad.op, gl_limit_target(N)));
  out.push_back(span_stage("limit: quantum plane coordinates commute", pl.fn, commutative_target(xs)));
  out.push_back(span_stage("limit: exterior plane coordinates anticommute", ex.fn, anticommutative_target(xs)));
  out.push_back(span_stage("limit: adjoint function part commutes", ad.fn, commutative_target(ms)));
  out.push_back(span_stage("limit: adjoint K-M relations", ad.ofp, adjoint_limit_target(N)));
  out.push_back(span_stage("limit: quantum plane K-x relations with eta0", pl.ofp, ell_act_target(N)));
  out.push_back(model_stage("model: vector fields satisfy the quantum plane limit", vector_field_model(N),
                            {pl.op, pl.fn, pl.ofp}));
  out.push_back(model_stage("model: coadjoint fields satisfy the adjoint limit", coadjoint_model(N),
                            {ad.op, ad.fn, ad.ofp}));
  if (N == 2)
    for (auto &s : su2_stages()) out.push_back(std::move(s));
  return out;
}

} // namespace recalc
