#include "recalc/bdalg.hpp"

#include <stdexcept>

namespace recalc {

namespace {

SlotMatrix r_chain(const ROperator &R, int p, int slots) {
  SlotMatrix x = SlotMatrix::identity(R.N, slots);
  for (int k = 1; k <= p; ++k) x = x * SlotMatrix::from_op(R, k, slots);
  return x;
}

std::vector<NCPoly> mismatch(const BDPresentation &P, const SlotMatrix &lhs, const SlotMatrix &rhs) {
  SlotMatrix acted = lhs.map([&](const NCPoly &e) { return act_split(P, e); });
  std::vector<NCPoly> out;
  for (const auto &e : (acted - rhs).relations()) {
    NCPoly r = P.normal_form(e);
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

} // namespace

std::vector<NCPoly> p_order_action_residual(const BDPresentation &P, int p) {
  if (p < 1) throw std::out_of_range("action order must be positive");
  int slots = p + 1;
  SlotMatrix fs = SlotMatrix::identity(P.N, slots);
  switch (P.flavor) {
  case Flavor::free:
  case Flavor::qplane:
  case Flavor::extplane:
    for (int k = 1; k <= p; ++k) fs = fs * fn_generator(P, k, slots);
    break;
  case Flavor::right_invariant:
    for (int k = 1; k <= p; ++k) fs = fs * matrix_copy(P.F, GenClass::M, k, slots);
    break;
  default:
    throw std::invalid_argument("p-th order action is defined for the free, plane and right-invariant flavours");
  }
  SlotMatrix lhs = op_generator(P, 1, slots) * r_chain(P.R, p, slots) * fs;
  SlotMatrix rhs = P.eta.pow(p) * (r_chain(op_inverse(P.R), p, slots) * fs);
  return mismatch(P, lhs, rhs);
}

std::vector<NCPoly> degree_one_action_residual(const BDPresentation &P) {
  SlotMatrix R1 = SlotMatrix::from_op(P.R, 1, 2), R1i = SlotMatrix::from_op(op_inverse(P.R), 1, 2);
  SlotMatrix f1 = fn_generator(P, 1, 2);
  if (P.flavor == Flavor::adjoint)
    return mismatch(P, op_generator(P, 1, 2) * (R1 * f1 * R1i), P.xi * (R1i * f1 * R1));
  if (P.flavor == Flavor::covector)
    return mismatch(P, op_generator(P, 2, 2) * f1, P.eta_tilde * (f1 * R1 * R1));
  throw std::invalid_argument("degree-one action check is defined for the adjoint and covector flavours");
}

std::vector<NCPoly> trace_commutators(const BDPresentation &P, int k) {
  if (!P.fn_part) throw std::invalid_argument("trace commutators need a matrix function part");
  NCPoly t = power_sum(*P.fn_part, k);
  std::vector<NCPoly> out;
  for (Letter g : P.letters()) {
    NCPoly gw = NCPoly::word(Word(1, g));
    NCPoly c = P.normal_form(t * gw - gw * t);
    if (!c.is_zero()) out.push_back(c);
  }
  return out;
}

} // namespace recalc
