#include "recalc/qmalg.hpp"

#include <iostream>
#include <stdexcept>

namespace recalc {

PolyMatrix QMAPresentation::normal_form(const PolyMatrix &m) const {
  PolyMatrix out = m;
  for (auto &row : out)
    for (auto &e : row) e = nf->normal_form(e);
  return out;
}

SlotMatrix matrix_copy(const ROperator &F, GenClass cls, int k, int slots) {
  SlotMatrix x = SlotMatrix::generator(cls, F.N, 1, slots);
  if (k > 1) {
    ROperator finv = op_inverse(F);
    for (int j = 1; j < k; ++j)
      x = SlotMatrix::from_op(F, j, slots) * x * SlotMatrix::from_op(finv, j, slots);
  }
  return x;
}

SlotMatrix copies_product(const ROperator &F, GenClass cls, int k) {
  SlotMatrix x = matrix_copy(F, cls, 1, k);
  for (int j = 2; j <= k; ++j) x = x * matrix_copy(F, cls, j, k);
  return x;
}

SlotMatrix cyclic_element(const ROperator &R, int k) {
  SlotMatrix x = SlotMatrix::identity(R.N, k);
  for (int j = k - 1; j >= 1; --j) x = x * SlotMatrix::from_op(R, j, k);
  return x;
}

SlotMatrix r_trace_slots(const SlotMatrix &x, const QMatrix &c, int first, int k) {
  SlotMatrix r = x;
  for (int s = first; s <= k; ++s) r = r.r_trace(c, s);
  return r;
}

QMAPresentation qma_relations(const ROperator &R, const ROperator &F, GenClass cls) {
  if (R.N != F.N || R.arity != 2 || F.arity != 2) throw std::invalid_argument("R and F must be N^2 x N^2 operators");
  auto [c1, c2] = compat_residual(R, F);
  if (!c1.m.is_zero() || !c2.m.is_zero()) throw IncompatiblePair("R and F are not a compatible pair");
  ROperator psi = skew_inverse(R);
  skew_inverse(F);
  QMAPresentation P;
  P.R = R;
  P.F = F;
  P.N = R.N;
  P.cls = cls;
  try {
    P.m = gl_type(R, R.N);
  } catch (const NotGLType &) {
    P.m = 0;
  }
  P.trace_form = bc_operators(R, psi);
  SlotMatrix R1 = SlotMatrix::from_op(R, 1, 2);
  SlotMatrix mm = copies_product(F, cls, 2);
  P.relations = (R1 * mm - mm * R1).relations();
  P.system = std::make_shared<const RewriteSystem>(rules_from_relations(P.relations));
  P.nf = std::make_shared<Normalizer>(P.system);
  return P;
}

QMAPresentation rtt_instance(const ROperator &R) { return qma_relations(R, make_flip(R.N), GenClass::T); }

QMAPresentation rea_instance(const ROperator &R, GenClass cls) {
  gl_type(R, R.N);
  return qma_relations(R, R, cls);
}

std::vector<NCPoly> consecutive_copy_residuals(const QMAPresentation &P, int kmax) {
  std::vector<NCPoly> out;
  for (int k = 2; k < kmax; ++k) {
    SlotMatrix Rk = SlotMatrix::from_op(P.R, k, kmax);
    SlotMatrix mm = matrix_copy(P.F, P.cls, k, kmax) * matrix_copy(P.F, P.cls, k + 1, kmax);
    for (const NCPoly &e : (Rk * mm - mm * Rk).relations()) {
      NCPoly r = P.normal_form(e);
      if (!r.is_zero()) out.push_back(r);
    }
  }
  return out;
}

namespace {

int char_bound(const QMAPresentation &P) { return P.m > 0 ? P.m : P.N; }

Coeff trace_of_identity(const QMAPresentation &P) {
  QScalar t;
  for (int i = 0; i < P.N; ++i) t += P.trace_form.c(i, i);
  return Coeff(t);
}

Coeff neg_v_pow(const QMAPresentation &P, int k) {
  Coeff v = Coeff(-P.R.deform);
  return v.pow(k);
}

} // namespace

NCPoly power_sum(const QMAPresentation &P, int k) {
  if (k < 0 || k > char_bound(P) + 1) throw std::out_of_range("power_sum: k out of range");
  if (k == 0) return NCPoly(trace_of_identity(P));
  SlotMatrix x = copies_product(P.F, P.cls, k) * cyclic_element(P.R, k);
  return P.normal_form(r_trace_slots(x, P.trace_form.c, 1, k).scalar_entry());
}

NCPoly elem_sym(const QMAPresentation &P, int k) {
  if (k < 0) throw std::out_of_range("elem_sym: negative k");
  if (k == 0) return NCPoly(1);
  if (P.m > 0 && k > P.m) {
    std::cerr << "warning: a_" << k << " vanishes above the GL(" << P.m << ") rank\n";
    return NCPoly();
  }
  auto tower = antisym_tower(P.R, k);
  SlotMatrix x = copies_product(P.F, P.cls, k) * SlotMatrix::from_op(tower[k - 1], 1, k);
  return P.normal_form(r_trace_slots(x, P.trace_form.c, 1, k).scalar_entry());
}

NCPoly newton_residual(const QMAPresentation &P, int k) {
  if (k < 1) throw std::out_of_range("newton_residual: k must be positive");
  Coeff sign = (k % 2 == 1) ? Coeff(1) : Coeff(-1);
  NCPoly r = sign * Coeff(v_int(P.R.deform, k)) * elem_sym(P, k);
  for (int i = 0; i < k; ++i) r -= neg_v_pow(P, i) * (power_sum(P, k - i) * elem_sym(P, i));
  return P.normal_form(r);
}

PolyMatrix generating_matrix(GenClass cls, int N) {
  PolyMatrix m(N, std::vector<NCPoly>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m[i][j] = NCPoly::gen(cls, i + 1, j + 1);
  return m;
}

PolyMatrix poly_mul(const PolyMatrix &a, const PolyMatrix &b) {
  std::size_t n = a.size();
  PolyMatrix c(n, std::vector<NCPoly>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool is_zero(const PolyMatrix &m) {
  for (const auto &row : m)
    for (const auto &e : row)
      if (!e.is_zero()) return false;
  return true;
}

namespace {

PolyMatrix identity_poly(int N) {
  PolyMatrix m(N, std::vector<NCPoly>(N));
  for (int i = 0; i < N; ++i) m[i][i] = NCPoly(1);
  return m;
}

} // namespace

PolyMatrix matrix_power_over(const QMAPresentation &P, int k) {
  if (k < 0) throw std::out_of_range("matrix_power_over: negative k");
  if (k == 0) return identity_poly(P.N);
  SlotMatrix x = copies_product(P.F, P.cls, k) * cyclic_element(P.R, k);
  return P.normal_form(r_trace_slots(x, P.trace_form.c, 2, k).as_square(1));
}

PolyMatrix matrix_power_plain(const QMAPresentation &P, int k) {
  PolyMatrix r = identity_poly(P.N), g = generating_matrix(P.cls, P.N);
  for (int j = 0; j < k; ++j) r = P.normal_form(poly_mul(r, g));
  return r;
}

PolyMatrix cayley_hamilton_residual(const QMAPresentation &P) {
  if (P.m < 1) throw NotGLType("Cayley-Hamilton identity needs a GL(m)-type R-matrix");
  PolyMatrix r(P.N, std::vector<NCPoly>(P.N));
  for (int k = 0; k <= P.m; ++k) {
    PolyMatrix pw = matrix_power_over(P, P.m - k);
    NCPoly a = elem_sym(P, k);
    Coeff s = neg_v_pow(P, k);
    for (int i = 0; i < P.N; ++i)
      for (int j = 0; j < P.N; ++j) r[i][j] += s * (pw[i][j] * a);
  }
  return P.normal_form(r);
}

std::vector<NCPoly> centrality_residual(const QMAPresentation &P, const NCPoly &element) {
  std::vector<NCPoly> out;
  for (int i = 1; i <= P.N; ++i)
    for (int j = 1; j <= P.N; ++j) {
      NCPoly g = NCPoly::gen(P.cls, i, j);
      out.push_back(P.normal_form(element * g - g * element));
    }
  return out;
}

NCPoly counit(const QMAPresentation &P, const NCPoly &p) {
  return p.substitute([&](Letter l) {
    if (letter_class(l) != P.cls) return NCPoly::word(Word(1, l));
    return NCPoly(letter_i(l) == letter_j(l) ? 1 : 0);
  });
}

} // namespace recalc
