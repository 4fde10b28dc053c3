#include "doctest.h"

#include "recalc/bdalg.hpp"

#include <random>

using namespace recalc;

namespace {

Coeff eta() { return Coeff::param(Param::eta); }

// R_{1->p} = R_1 R_2 .. R_p (or inverses) in `slots` factors.
SlotMatrix r_chain(const ROperator &R, int p, int slots) {
  SlotMatrix x = SlotMatrix::identity(R.N, slots);
  for (int k = 1; k <= p; ++k) x = x * SlotMatrix::from_op(R, k, slots);
  return x;
}

// Residual entries of act(lhs) - rhs, with lhs words reading (operators)(functions).
std::vector<NCPoly> action_mismatch(const BDPresentation &P, const SlotMatrix &lhs, const SlotMatrix &rhs) {
  SlotMatrix acted = lhs.map([&](const NCPoly &e) { return act_split(P, e); });
  std::vector<NCPoly> out;
  for (const auto &e : (acted - rhs).relations()) {
    NCPoly r = P.normal_form(e);
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

const BDPresentation &flavor(int k) {
  static const std::vector<BDPresentation> all = [] {
    ROperator R = make_dj(2);
    std::vector<BDPresentation> v;
    v.push_back(bd_free(R, eta()));
    v.push_back(bd_quantum_plane(R, eta()));
    v.push_back(bd_ext_plane(R, eta()));
    v.push_back(bd_covector(R, eta().inverse()));
    v.push_back(bd_adjoint(R));
    v.push_back(bd_right_invariant(R, R, eta()));
    v.push_back(bd_right_invariant(R, make_flip(2), eta()));
    return v;
  }();
  return all[k];
}
constexpr int kFlavors = 7;

NCPoly random_linear(std::mt19937 &rng, const std::vector<Letter> &letters) {
  std::uniform_int_distribution<int> val(-2, 2);
  NCPoly p;
  for (Letter l : letters) p.add_term(Word(1, l), Coeff(val(rng)));
  return p;
}

std::vector<Letter> letters_of(const BDPresentation &P, bool op) {
  std::vector<Letter> out;
  for (Letter l : P.letters())
    if (is_operator_class(letter_class(l)) == op) out.push_back(l);
  return out;
}

} // namespace

TEST_CASE("braided differential algebras are confluent at degree 3") {
  for (int k = 0; k < kFlavors; ++k) {
    INFO(flavor_name(flavor(k).flavor), " #", k);
    CHECK(confluence_residuals(*flavor(k).system).empty());
  }
}

TEST_CASE("function parts") {
  const auto &plane = flavor(1);
  CHECK(plane.fn_system->rules().size() == 1);
  CHECK(plane.normal_form(parse_ncpoly("x[2] x[1]")) == parse_ncpoly("q^-1 * x[1] x[2]"));
  const auto &ext = flavor(2);
  CHECK(ext.normal_form(parse_ncpoly("x[2] x[1]")) == parse_ncpoly("-q * x[1] x[2]"));
  // graded dimensions of the exterior plane: 1, 2, 1, 0
  std::vector<int> dims;
  for (int d = 0; d <= 3; ++d) {
    int count = 0;
    int total = 1 << d;
    for (int bits = 0; bits < total; ++bits) {
      Word w;
      for (int t = 0; t < d; ++t) w.push_back(make_letter(GenClass::x, ((bits >> t) & 1) + 1));
      if (ext.fn_system->is_normal(w)) ++count;
    }
    dims.push_back(count);
  }
  CHECK(dims == std::vector<int>{1, 2, 1, 0});
}

TEST_CASE("unit action is the counit") {
  for (int k = 0; k < kFlavors; ++k)
    for (Letter l : letters_of(flavor(k), true)) {
      NCPoly r = act(flavor(k), NCPoly::word(Word(1, l)), NCPoly(1));
      CHECK(r == NCPoly(letter_i(l) == letter_j(l) ? 1 : 0));
    }
  CHECK(act(flavor(1), NCPoly(1), parse_ncpoly("x[1] x[2]")) == parse_ncpoly("x[1] x[2]"));
}

TEST_CASE("action on tensor powers carries eta^p") {
  const auto &P = flavor(0);
  ROperator R = P.R, Rinv = op_inverse(P.R);
  for (int p = 1; p <= 3; ++p) {
    int slots = p + 1;
    SlotMatrix xs = SlotMatrix::identity(2, slots);
    for (int k = 1; k <= p; ++k) xs = xs * fn_generator(P, k, slots);
    SlotMatrix lhs = op_generator(P, 1, slots) * r_chain(R, p, slots) * xs;
    SlotMatrix rhs = P.eta.pow(p) * (r_chain(Rinv, p, slots) * xs);
    CHECK(action_mismatch(P, lhs, rhs).empty());
  }
}

TEST_CASE("right-invariant p-th order action") {
  for (int k : {5, 6}) {
    const auto &P = flavor(k);
    ROperator Rinv = op_inverse(P.R);
    for (int p = 1; p <= 3; ++p) {
      int slots = p + 1;
      SlotMatrix ms = SlotMatrix::identity(2, slots);
      for (int j = 1; j <= p; ++j) ms = ms * matrix_copy(P.F, GenClass::M, j, slots);
      SlotMatrix lhs = op_generator(P, 1, slots) * r_chain(P.R, p, slots) * ms;
      SlotMatrix rhs = P.eta.pow(p) * (r_chain(Rinv, p, slots) * ms);
      CHECK(action_mismatch(P, lhs, rhs).empty());
    }
  }
}

TEST_CASE("adjoint and covector degree-one actions") {
  const auto &ad = flavor(4);
  ROperator R = ad.R, Rinv = op_inverse(R);
  SlotMatrix R1 = SlotMatrix::from_op(R, 1, 2), R1i = SlotMatrix::from_op(Rinv, 1, 2);
  SlotMatrix M1 = fn_generator(ad, 1, 2);
  CHECK(action_mismatch(ad, op_generator(ad, 1, 2) * (R1 * M1 * R1i), R1i * M1 * R1).empty());

  const auto &co = flavor(3);
  SlotMatrix y1 = fn_generator(co, 1, 2);
  CHECK(action_mismatch(co, op_generator(co, 2, 2) * y1, co.eta_tilde * (y1 * R1 * R1)).empty());
}

TEST_CASE("action is well posed") {
  for (int k : {1, 2, 4, 5, 6}) {
    INFO(k);
    CHECK(action_wellposed_residual(flavor(k)).empty());
  }
  // corrupt one OFP coefficient
  BDPresentation bad = flavor(1);
  NCPoly rel = bad.ofp_relations[0];
  NCPoly changed;
  bool first = true;
  for (const auto &[w, c] : rel.terms()) {
    changed.add_term(w, first ? Coeff(3) * c : c);
    first = false;
  }
  bad.ofp_relations[0] = changed;
  bad.rebuild();
  CHECK_FALSE(action_wellposed_residual(bad).empty());
}

TEST_CASE("action is a module structure") {
  std::mt19937 rng(11);
  for (int k = 0; k < kFlavors; ++k) {
    const auto &P = flavor(k);
    auto ops = letters_of(P, true), fns = letters_of(P, false);
    for (int trial = 0; trial < 4; ++trial) {
      NCPoly a = random_linear(rng, ops), b = random_linear(rng, ops);
      NCPoly f = random_linear(rng, fns) * random_linear(rng, fns) + random_linear(rng, fns);
      CHECK(P.normal_form(act(P, a * b, f) - act(P, a, act(P, b, f))).is_zero());
    }
  }
}

TEST_CASE("centrality of traces") {
  const auto &ad = flavor(4);
  const auto &ri = flavor(5);
  auto central = [](const BDPresentation &P, const NCPoly &e) {
    for (Letter g : P.letters()) {
      NCPoly gw = NCPoly::word(Word(1, g));
      if (!P.normal_form(e * gw - gw * e).is_zero()) return false;
    }
    return true;
  };
  for (int k = 1; k <= 2; ++k) {
    CHECK(central(ad, power_sum(*ad.fn_part, k)));
  }
  CHECK_FALSE(central(ri, power_sum(*ri.fn_part, 1)));
}

TEST_CASE("flip at q=1 gives classical commutation") {
  auto P = bd_free(make_flip(2), Coeff(1));
  CHECK(P.normal_form(parse_ncpoly("L[1,2] x[1]")) == parse_ncpoly("x[1] L[1,2]"));
  auto C = bd_covector(make_flip(2), Coeff(1));
  CHECK(confluence_residuals(*C.system).empty());
}
