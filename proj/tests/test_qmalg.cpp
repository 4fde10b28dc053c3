#include "doctest.h"

#include "recalc/qmalg.hpp"

using namespace recalc;

namespace {

const QMAPresentation &rea2() {
  static const QMAPresentation p = rea_instance(make_dj(2));
  return p;
}
const QMAPresentation &rtt2() {
  static const QMAPresentation p = rtt_instance(make_dj(2));
  return p;
}

bool all_zero(const std::vector<NCPoly> &v) {
  for (const auto &p : v)
    if (!p.is_zero()) return false;
  return true;
}

} // namespace

TEST_CASE("presentations") {
  CHECK(rea2().system->rules().size() == 6);
  CHECK(rtt2().system->rules().size() == 6);
  CHECK(rea2().m == 2);
  CHECK(confluence_residuals(*rea2().system).empty());
  CHECK(confluence_residuals(*rtt2().system).empty());
  CHECK(consecutive_copy_residuals(rea2()).empty());
  CHECK(consecutive_copy_residuals(rtt2()).empty());

  // RTT relation R_1 T_1 T_2 = T_1 T_2 R_1 gives T_1^1 T_1^2 = q T_1^2 T_1^1 for DJ
  auto nf = rtt2().normal_form(parse_ncpoly("T[1,2] T[1,1]"));
  CHECK(nf == parse_ncpoly("q^-1 * T[1,1] T[1,2]"));

  QMatrix g = QMatrix::identity(2);
  g(0, 1) = QScalar(1);
  CHECK_THROWS_AS(qma_relations(make_dj(2), change_basis(make_dj(2), g)), IncompatiblePair);
}

TEST_CASE("flip at q=1 gives commutative relations") {
  ROperator p = make_flip(2);
  auto rtt = rtt_instance(p);
  auto rea = rea_instance(p);
  for (const auto *P : {&rtt, &rea}) {
    CHECK(P->system->rules().size() == 6);
    for (const auto &r : P->system->rules()) {
      CHECK(r.rhs.size() == 1);
      Word swapped{r.lhs[1], r.lhs[0]};
      CHECK(r.rhs == NCPoly::word(swapped));
    }
  }
}

TEST_CASE("counit annihilates relations") {
  for (const auto *P : {&rea2(), &rtt2()})
    for (const auto &rel : P->relations) CHECK(counit(*P, rel).is_zero());
}

TEST_CASE("power sums and elementary symmetric functions") {
  const auto &P = rea2();
  CHECK(power_sum(P, 0) == NCPoly(Coeff::q(-1) + Coeff::q(-3)));
  NCPoly tr;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!P.trace_form.c(i, j).is_zero()) tr += Coeff(P.trace_form.c(i, j)) * NCPoly::gen(GenClass::L, j + 1, i + 1);
  CHECK(power_sum(P, 1) == tr);
  CHECK(elem_sym(P, 0) == NCPoly(1));
  CHECK(elem_sym(P, 1) == power_sum(P, 1));
  CHECK(elem_sym(rtt2(), 1) == power_sum(rtt2(), 1));
  NCPoly p1 = power_sum(P, 1), p2 = power_sum(P, 2);
  CHECK(P.normal_form(Coeff(q_int(2)) * elem_sym(P, 2) - Coeff::q() * p1 * p1 + p2).is_zero());
  CHECK(elem_sym(P, 3).is_zero());
  CHECK_THROWS(power_sum(P, 4));
}

TEST_CASE("REA power sums are traces of plain powers") {
  const auto &P = rea2();
  for (int k = 1; k <= 3; ++k) {
    PolyMatrix pw = matrix_power_plain(P, k);
    NCPoly tr = r_trace(P.trace_form, pw, [](const QScalar &c, const NCPoly &x) { return Coeff(c) * x; });
    CHECK(P.normal_form(tr - power_sum(P, k)).is_zero());
  }
}

TEST_CASE("centrality") {
  const auto &P = rea2();
  CHECK(all_zero(centrality_residual(P, power_sum(P, 1))));
  CHECK(all_zero(centrality_residual(P, power_sum(P, 2))));
  CHECK(all_zero(centrality_residual(P, elem_sym(P, 2))));
  CHECK_FALSE(all_zero(centrality_residual(P, NCPoly::gen(GenClass::L, 1, 1))));
  // the quantum determinant of the RTT algebra is central
  CHECK(all_zero(centrality_residual(rtt2(), elem_sym(rtt2(), 2))));
  CHECK_FALSE(all_zero(centrality_residual(rtt2(), power_sum(rtt2(), 1))));
}

TEST_CASE("characteristic subalgebra is abelian") {
  for (const auto *P : {&rea2(), &rtt2()}) {
    std::vector<NCPoly> gens;
    for (int k = 0; k <= 2; ++k) {
      gens.push_back(power_sum(*P, k));
      gens.push_back(elem_sym(*P, k));
    }
    for (const auto &a : gens)
      for (const auto &b : gens) CHECK(P->normal_form(a * b - b * a).is_zero());
  }
}

TEST_CASE("Newton and Cayley-Hamilton identities") {
  for (const auto *P : {&rea2(), &rtt2()}) {
    CHECK(newton_residual(*P, 1).is_zero());
    CHECK(newton_residual(*P, 2).is_zero());
    CHECK(is_zero(cayley_hamilton_residual(*P)));
  }
  auto classical = rea_instance(make_flip(2));
  CHECK(is_zero(cayley_hamilton_residual(classical)));
  CHECK(newton_residual(classical, 2).is_zero());
  // classical CH: M^2 - tr(M) M + det(M) I
  NCPoly a2 = elem_sym(classical, 2);
  CHECK(a2 == classical.normal_form(parse_ncpoly("L[1,1] L[2,2] - L[1,2] L[2,1]")));
}

TEST_CASE("quantum powers") {
  const auto &P = rea2();
  CHECK(matrix_power_over(P, 0)[0][0] == NCPoly(1));
  CHECK(matrix_power_over(P, 1) == generating_matrix(GenClass::L, 2));
  CHECK(matrix_power_over(P, 2) == matrix_power_plain(P, 2));
  CHECK(matrix_power_over(P, 3) == matrix_power_plain(P, 3));
  CHECK_FALSE(matrix_power_over(rtt2(), 2) == matrix_power_plain(rtt2(), 2));
}

TEST_CASE("rescaling the generating matrix scales a_k by eta^k") {
  const auto &P = rea2();
  auto scale = [](Letter l) { return Coeff::param(Param::eta) * NCPoly::word(Word(1, l)); };
  for (int k = 0; k <= 2; ++k) {
    NCPoly a = elem_sym(P, k);
    CHECK(a.substitute(scale) == Coeff::param(Param::eta).pow(k) * a);
  }
}
