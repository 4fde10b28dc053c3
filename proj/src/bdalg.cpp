#include "recalc/bdalg.hpp"

#include <stdexcept>

namespace recalc {

std::string flavor_name(Flavor f) {
  switch (f) {
  case Flavor::free: return "free";
  case Flavor::qplane: return "qplane";
  case Flavor::extplane: return "extplane";
  case Flavor::covector: return "covector";
  case Flavor::adjoint: return "adjoint";
  case Flavor::right_invariant: return "right_invariant";
  }
  return "?";
}

PolyMatrix BDPresentation::normal_form(const PolyMatrix &m) const {
  PolyMatrix out = m;
  for (auto &row : out)
    for (auto &e : row) e = nf->normal_form(e);
  return out;
}

namespace {

void append(std::vector<Letter> &out, GenClass c, int N) {
  if (c == GenClass::x || c == GenClass::y) {
    for (int i = 1; i <= N; ++i) out.push_back(make_letter(c, i));
    return;
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) out.push_back(make_letter(c, i, j));
}

std::vector<NCPoly> concat(std::initializer_list<const std::vector<NCPoly> *> parts) {
  std::vector<NCPoly> out;
  for (const auto *p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

} // namespace

std::vector<Letter> BDPresentation::letters() const {
  std::vector<Letter> out;
  append(out, fn_cls, N);
  append(out, op_cls, N);
  for (const auto &[cls, inv] : inverses) out.push_back(inv.letter);
  return out;
}

void BDPresentation::rebuild() {
  auto build = [this](const std::vector<NCPoly> &rels) {
    return std::make_shared<const RewriteSystem>(completion_len > 0 ? complete_system(rels, completion_len)
                                                                    : rules_from_relations(rels));
  };
  system = build(concat({&op_relations, &fn_relations, &ofp_relations, &extra_relations}));
  fn_system = build(fn_relations);
  free_system = build(concat({&op_relations, &ofp_relations, &extra_relations}));
  nf = std::make_shared<Normalizer>(system);
  fn_nf = std::make_shared<Normalizer>(fn_system);
  free_nf = std::make_shared<Normalizer>(free_system);
}

SlotMatrix fn_generator(const BDPresentation &P, int slot, int slots) {
  return SlotMatrix::generator(P.fn_cls, P.N, slot, slots);
}

SlotMatrix op_generator(const BDPresentation &P, int slot, int slots) {
  return SlotMatrix::generator(P.op_cls, P.N, slot, slots);
}

namespace {

BDPresentation base(Flavor flavor, const ROperator &R, GenClass op_cls, GenClass fn_cls) {
  BDPresentation P;
  P.flavor = flavor;
  P.R = R;
  P.F = R;
  P.N = R.N;
  P.op_part = rea_instance(R, op_cls);
  P.m = P.op_part.m;
  P.op_cls = op_cls;
  P.fn_cls = fn_cls;
  P.op_relations = P.op_part.relations;
  return P;
}

void check_eta(const Coeff &eta) {
  if (eta.is_zero() || !eta.is_unit()) throw std::invalid_argument("degenerate eta: " + eta.str());
}

BDPresentation vector_flavor(Flavor flavor, const ROperator &R, const Coeff &eta) {
  check_eta(eta);
  BDPresentation P = base(flavor, R, GenClass::L, GenClass::x);
  P.eta = eta;
  P.eta_tilde = eta.inverse();
  SlotMatrix R1 = SlotMatrix::from_op(R, 1, 2);
  SlotMatrix L1 = op_generator(P, 1, 2), L2 = op_generator(P, 2, 2);
  SlotMatrix x1 = fn_generator(P, 1, 2), x2 = fn_generator(P, 2, 2);
  P.ofp_relations = (R1 * L1 * R1 * x1 - eta * (x1 * L2)).relations();
  Coeff v(R.deform);
  if (flavor == Flavor::qplane) P.fn_relations = (R1 * x1 * x2 - v * (x1 * x2)).relations();
  if (flavor == Flavor::extplane) P.fn_relations = (R1 * x1 * x2 + v.inverse() * (x1 * x2)).relations();
  P.rebuild();
  return P;
}

} // namespace

BDPresentation bd_free(const ROperator &R, const Coeff &eta) { return vector_flavor(Flavor::free, R, eta); }
BDPresentation bd_quantum_plane(const ROperator &R, const Coeff &eta) {
  return vector_flavor(Flavor::qplane, R, eta);
}
BDPresentation bd_ext_plane(const ROperator &R, const Coeff &eta) {
  return vector_flavor(Flavor::extplane, R, eta);
}

BDPresentation bd_covector(const ROperator &R, const Coeff &eta_tilde) {
  check_eta(eta_tilde);
  BDPresentation P = base(Flavor::covector, R, GenClass::L, GenClass::y);
  P.eta_tilde = eta_tilde;
  P.eta = eta_tilde.inverse();
  SlotMatrix R1 = SlotMatrix::from_op(R, 1, 2);
  SlotMatrix L1 = op_generator(P, 1, 2), L2 = op_generator(P, 2, 2);
  SlotMatrix y1 = fn_generator(P, 1, 2);
  P.ofp_relations = (L2 * y1 - eta_tilde * (y1 * R1 * L1 * R1)).relations();
  P.rebuild();
  return P;
}

BDPresentation bd_adjoint(const ROperator &R, GenClass op_cls, const Coeff &xi) {
  BDPresentation P = base(Flavor::adjoint, R, op_cls, GenClass::M);
  P.xi = xi;
  P.fn_part = rea_instance(R, GenClass::M);
  P.fn_relations = P.fn_part->relations;
  SlotMatrix R1 = SlotMatrix::from_op(R, 1, 2);
  SlotMatrix L1 = op_generator(P, 1, 2), M1 = fn_generator(P, 1, 2);
  P.ofp_relations = (R1 * L1 * R1 * M1 - M1 * R1 * L1 * R1).relations();
  P.rebuild();
  return P;
}

BDPresentation bd_right_invariant(const ROperator &R, const ROperator &F, const Coeff &eta) {
  check_eta(eta);
  BDPresentation P = base(Flavor::right_invariant, R, GenClass::L, GenClass::M);
  P.F = F;
  P.eta = eta;
  P.eta_tilde = eta.inverse();
  P.fn_part = qma_relations(R, F, GenClass::M);
  P.fn_relations = P.fn_part->relations;
  SlotMatrix R1 = SlotMatrix::from_op(R, 1, 2);
  SlotMatrix L1 = op_generator(P, 1, 2), M1 = fn_generator(P, 1, 2);
  SlotMatrix Lbar2 = matrix_copy(F, GenClass::L, 2, 2);
  P.ofp_relations = (R1 * L1 * R1 * M1 - eta * (M1 * Lbar2)).relations();
  P.rebuild();
  return P;
}

Coeff op_counit(const BDPresentation &P, Letter l) {
  GenClass c = letter_class(l);
  if (c == GenClass::K) return Coeff();
  if (c == P.op_cls) return letter_i(l) == letter_j(l) ? P.xi : Coeff();
  if (c == GenClass::ainvL) {
    const auto &inv = P.inverses.at(GenClass::L);
    NCPoly e = inv.a.substitute([&](Letter g) { return NCPoly(op_counit(P, g)); });
    Coeff v = e.constant();
    if (v.is_zero() || !v.is_unit()) throw std::domain_error("counit of a_m(L) is not invertible");
    return v.inverse();
  }
  throw std::invalid_argument("no counit for " + letter_str(l));
}

namespace {

NCPoly counit_tail(const BDPresentation &P, const NCPoly &nf) {
  NCPoly out;
  for (const auto &[w, c] : nf.terms()) {
    std::size_t k = 0;
    while (k < w.size() && !is_operator_class(letter_class(w[k]))) ++k;
    Coeff s = c;
    for (std::size_t t = k; t < w.size() && !s.is_zero(); ++t) {
      if (!is_operator_class(letter_class(w[t])))
        throw std::logic_error("operator left of a function generator after normal ordering: " + word_str(w));
      s = s * op_counit(P, w[t]);
    }
    out.add_term(w.substr(0, k), s);
  }
  return out;
}

NCPoly act_with(const BDPresentation &P, Normalizer &nf, const NCPoly &p) {
  return counit_tail(P, nf.normal_form(p));
}

} // namespace

NCPoly act(const BDPresentation &P, const NCPoly &a, const NCPoly &f) { return act_with(P, *P.nf, a * f); }

NCPoly act_split(const BDPresentation &P, const NCPoly &p) {
  for (const auto &[w, c] : p.terms()) {
    bool seen_fn = false;
    for (Letter l : w) {
      bool op = is_operator_class(letter_class(l));
      if (op && seen_fn) throw std::invalid_argument("act_split: word is not (operators)(functions): " + word_str(w));
      seen_fn = seen_fn || !op;
    }
  }
  return act_with(P, *P.nf, p);
}

std::vector<NCPoly> action_wellposed_residual(const BDPresentation &P) {
  std::vector<NCPoly> out;
  std::vector<Letter> ops;
  append(ops, P.op_cls, P.N);
  for (Letter g : ops)
    for (const NCPoly &rel : P.fn_relations) {
      NCPoly r = P.fn_nf->normal_form(act_with(P, *P.free_nf, NCPoly::word(Word(1, g)) * rel));
      if (!r.is_zero()) out.push_back(r);
    }
  return out;
}

} // namespace recalc
