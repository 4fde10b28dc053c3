#include "doctest.h"

#include "recalc/climit.hpp"

#include <map>

using namespace recalc;

namespace {

Coeff eta() { return Coeff::param(Param::eta); }

std::vector<Letter> plane_letters() { return {make_letter(GenClass::x, 1), make_letter(GenClass::x, 2)}; }

bool satisfies(const OperatorModel &m, const std::vector<NCPoly> &rels) {
  for (const auto &r : rels)
    if (!model_violation(m, r).empty()) return false;
  return true;
}

} // namespace

TEST_CASE("shifted REA has the modified reflection form") {
  ROperator R = make_dj(2);
  BDPresentation A = bd_adjoint(R);
  SlotMatrix R1 = SlotMatrix::from_op(R, 1, 2), K1 = SlotMatrix::generator(GenClass::K, 2, 1, 2);
  std::vector<NCPoly> mrea = (R1 * K1 * R1 * K1 - K1 * R1 * K1 * R1 - (R1 * K1 - K1 * R1)).relations();
  CHECK(same_span(shift_to_K(A.op_relations, GenClass::L), mrea));
  // the same form without the linear part is a different algebra
  std::vector<NCPoly> plain = (R1 * K1 * R1 * K1 - K1 * R1 * K1 * R1).relations();
  CHECK_FALSE(same_span(shift_to_K(A.op_relations, GenClass::L), plain));
}

TEST_CASE("shift and unshift are inverse") {
  BDPresentation P = bd_quantum_plane(make_dj(2), eta());
  for (const auto &r : P.ofp_relations) CHECK(unshift_from_K(shift_to_K(r, GenClass::L), GenClass::L) == r);
  for (const auto &r : P.op_relations) CHECK(unshift_from_K(shift_to_K(r, GenClass::L), GenClass::L) == r);
}

TEST_CASE("counit of K vanishes") {
  BDPresentation P = bd_free(make_dj(2), eta());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      NCPoly K = shift_to_K(NCPoly::gen(GenClass::L, i, j), GenClass::L);
      // L = delta - lambda K, so eps(K) = (delta - eps(L)) / lambda
      Coeff eps_l = op_counit(P, make_letter(GenClass::L, i, j));
      CHECK(eps_l == Coeff(i == j ? 1 : 0));
      CHECK(K.constant() == Coeff(i == j ? 1 : 0));
    }
}

TEST_CASE("h-expansion valuations") {
  ROperator R = make_dj(2);
  BDPresentation P = bd_quantum_plane(R, eta());
  HExpansion op = limit_relations(shift_to_K(P.op_relations, GenClass::L));
  for (int v : op.valuation) CHECK(v == 2);
  HExpansion fn = limit_relations(P.fn_relations);
  REQUIRE_FALSE(fn.valuation.empty());
  for (int v : fn.valuation) CHECK(v == 0);
  HExpansion ofp = limit_relations(shift_to_K(P.ofp_relations, GenClass::L));
  for (int v : ofp.valuation) CHECK(v == 1);
  NCPoly pole = Coeff(QScalar::q() - QScalar(1)).inverse() * NCPoly::gen(GenClass::x, 1);
  CHECK_THROWS_AS(limit_relations({pole}), PoleError);
}

TEST_CASE("gl target is a Lie algebra") {
  // [E_ij, E_kl] = d_kj E_il - d_il E_kj on the basis, checked for Jacobi
  using Elt = std::map<std::pair<int, int>, int>;
  const int N = 2;
  auto bracket = [](const Elt &a, const Elt &b) {
    Elt out;
    for (const auto &[ij, ca] : a)
      for (const auto &[kl, cb] : b) {
        auto [i, j] = ij;
        auto [k, l] = kl;
        if (k == j) out[{i, l}] += ca * cb;
        if (i == l) out[{k, j}] -= ca * cb;
      }
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
    return out;
  };
  auto add = [](Elt a, const Elt &b) {
    for (const auto &[k, v] : b) a[k] += v;
    std::erase_if(a, [](const auto &kv) { return kv.second == 0; });
    return a;
  };
  std::vector<Elt> basis;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) basis.push_back({{{i, j}, 1}});
  for (const auto &a : basis)
    for (const auto &b : basis) {
      CHECK(add(bracket(a, b), bracket(b, a)).empty());
      for (const auto &c : basis)
        CHECK(add(add(bracket(a, bracket(b, c)), bracket(b, bracket(c, a))), bracket(c, bracket(a, b))).empty());
    }
  CHECK(gl_limit_target(2).size() == 16);
}

TEST_CASE("classical limits match the targets") {
  ROperator R = make_dj(2);
  ClassicalSystem ad = classical_system(bd_adjoint(R));
  ClassicalSystem pl = classical_system(bd_quantum_plane(R, eta()));
  ClassicalSystem ex = classical_system(bd_ext_plane(R, eta()));
  CHECK(same_span(ad.op, gl_limit_target(2)));
  CHECK(same_span(pl.fn, commutative_target(plane_letters())));
  CHECK(same_span(ex.fn, anticommutative_target(plane_letters())));
  CHECK(same_span(ad.ofp, adjoint_limit_target(2)));
  CHECK(same_span(pl.ofp, ell_act_target(2)));
  // the eta0 term is needed
  std::vector<NCPoly> no_eta0;
  for (const auto &r : ell_act_target(2)) no_eta0.push_back(r.map_coeffs([](const Coeff &c) {
    return c.substitute(Param::eta0, Coeff());
  }));
  CHECK(outside_span(pl.ofp, no_eta0).has_value());
  CHECK_FALSE(same_span(pl.fn, ex.fn));
}

TEST_CASE("differential operator models") {
  ROperator R = make_dj(2);
  ClassicalSystem ad = classical_system(bd_adjoint(R));
  ClassicalSystem pl = classical_system(bd_quantum_plane(R, eta()));
  ClassicalSystem qm = classical_system(bd_adjoint(R, GenClass::Q, Coeff::param(Param::xi)));
  OperatorModel vf = vector_field_model(2);
  CHECK(satisfies(vf, pl.op));
  CHECK(satisfies(vf, pl.ofp));
  CHECK(satisfies(coadjoint_model(2), ad.op));
  CHECK(satisfies(coadjoint_model(2), ad.ofp));
  CHECK(satisfies(su2_model(), qm.op));
  CHECK(satisfies(su2_model(), qm.ofp));
  // with K = +(compact form) the K-M relations fail
  CHECK_FALSE(satisfies(su2_model(1), qm.ofp));
  CHECK(satisfies(coadjoint_model(2), ad.fn));
  CHECK(monomials_up_to(3, 3).size() == 20);
}

TEST_CASE("CPoly arithmetic") {
  CPoly x = CPoly::var(2, 0), y = CPoly::var(2, 1);
  CPoly f = x * x * y + Coeff(3) * y;
  CHECK(f.derivative(0) == Coeff(2) * (x * y));
  CHECK(f.derivative(1) == x * x + CPoly::constant(2, 3));
  CHECK((f - f).is_zero());
}

TEST_CASE("classical limit checks pass") {
  for (int N : {2, 3})
    for (const auto &s : classical_limit_checks(N)) {
      INFO(N, " ", s.name, ": ", s.witness);
      CHECK(s.pass);
    }
}
