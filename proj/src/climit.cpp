#include "recalc/climit.hpp"

#include <stdexcept>

namespace recalc {

namespace {

Coeff lambda() { return Coeff(QScalar::q() - QScalar::q(-1)); }

Coeff shift_eta(const Coeff &c) {
  return c.substitute(Param::eta, Coeff(1) - lambda() * Coeff::param(Param::eta0));
}

NCPoly delta(int i, int j) { return NCPoly(i == j ? 1 : 0); }

void check_operator_class(GenClass c) {
  if (c != GenClass::L && c != GenClass::Q) throw std::invalid_argument("shift needs operator class L or Q");
}

// Reduces p by exact matches of rule left-hand sides (no factor matching).
NCPoly linear_reduce(NCPoly p, const RewriteSystem &sys) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto &[w, c] : p.terms()) {
      const NCPoly *rhs = sys.find(w);
      if (!rhs) continue;
      Coeff cc = c;
      Word ww = w;
      p.add_term(ww, -cc);
      p += cc * *rhs;
      changed = true;
      break;
    }
  }
  return p;
}

} // namespace

NCPoly shift_to_K(const NCPoly &p, GenClass from) {
  check_operator_class(from);
  Coeff lam = lambda();
  NCPoly s = p.substitute([&](Letter l) {
    if (letter_class(l) != from) return NCPoly::word(Word(1, l));
    int i = letter_i(l), j = letter_j(l);
    return delta(i, j) - lam * NCPoly::gen(GenClass::K, i, j);
  });
  return s.map_coeffs(shift_eta);
}

std::vector<NCPoly> shift_to_K(const std::vector<NCPoly> &rels, GenClass from) {
  std::vector<NCPoly> out;
  out.reserve(rels.size());
  for (const auto &r : rels) out.push_back(shift_to_K(r, from));
  return out;
}

NCPoly unshift_from_K(const NCPoly &p, GenClass to) {
  check_operator_class(to);
  Coeff inv = lambda().inverse();
  NCPoly s = p.substitute([&](Letter l) {
    if (letter_class(l) != GenClass::K) return NCPoly::word(Word(1, l));
    int i = letter_i(l), j = letter_j(l);
    return inv * (delta(i, j) - NCPoly::gen(to, i, j));
  });
  Coeff eta0 = inv * (Coeff(1) - Coeff::param(Param::eta));
  return s.map_coeffs([&](const Coeff &c) { return c.substitute(Param::eta0, eta0); });
}

HExpansion limit_relations(const std::vector<NCPoly> &rels) {
  HExpansion out;
  for (const auto &r : rels) {
    if (r.is_zero()) continue;
    int v = r.terms().begin()->second.valuation_at_1();
    for (const auto &[w, c] : r.terms()) v = std::min(v, c.valuation_at_1());
    if (v < 0) throw PoleError("pole at q = 1 of order " + std::to_string(-v) + " in relation " + r.str());
    NCPoly lead, next;
    for (const auto &[w, c] : r.terms()) {
      auto e = c.expand_at_1(1, -v);
      lead.add_term(w, e[0]);
      next.add_term(w, e[1]);
    }
    out.source.push_back(r);
    out.valuation.push_back(v);
    out.leading.push_back(lead);
    out.next.push_back(next);
  }
  return out;
}

ClassicalSystem classical_system(const BDPresentation &P) {
  ClassicalSystem out;
  out.op = limit_relations(shift_to_K(P.op_relations, P.op_cls)).leading;
  out.fn = limit_relations(P.fn_relations).leading;
  out.ofp = limit_relations(shift_to_K(P.ofp_relations, P.op_cls)).leading;
  return out;
}

std::optional<NCPoly> outside_span(const std::vector<NCPoly> &a, const std::vector<NCPoly> &b) {
  RewriteSystem sys = rules_from_relations(b);
  for (const auto &p : a)
    if (!linear_reduce(p, sys).is_zero()) return p;
  return std::nullopt;
}

bool same_span(const std::vector<NCPoly> &a, const std::vector<NCPoly> &b) {
  return !outside_span(a, b) && !outside_span(b, a);
}

std::vector<NCPoly> gl_limit_target(int N) {
  if (N < 2) throw std::invalid_argument("gl target needs N >= 2");
  auto K = [](int i, int j) { return NCPoly::gen(GenClass::K, i, j); };
  std::vector<NCPoly> out;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l)
          out.push_back(K(i, j) * K(k, l) - K(k, l) * K(i, j) - delta(k, j) * K(i, l) + delta(i, l) * K(k, j));
  return out;
}

std::vector<NCPoly> commutative_target(const std::vector<Letter> &letters) {
  std::vector<NCPoly> out;
  for (std::size_t a = 0; a < letters.size(); ++a)
    for (std::size_t b = a + 1; b < letters.size(); ++b)
      out.push_back(NCPoly::word({letters[a], letters[b]}) - NCPoly::word({letters[b], letters[a]}));
  return out;
}

std::vector<NCPoly> anticommutative_target(const std::vector<Letter> &letters) {
  std::vector<NCPoly> out;
  for (std::size_t a = 0; a < letters.size(); ++a)
    for (std::size_t b = a; b < letters.size(); ++b)
      out.push_back(NCPoly::word({letters[a], letters[b]}) + NCPoly::word({letters[b], letters[a]}));
  return out;
}

std::vector<NCPoly> ell_act_target(int N) {
  Coeff eta0 = Coeff::param(Param::eta0);
  std::vector<NCPoly> out;
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l <= N; ++l)
      for (int i = 1; i <= N; ++i) {
        NCPoly K = NCPoly::gen(GenClass::K, k, l), x = NCPoly::gen(GenClass::x, i);
        NCPoly r = K * x - x * K;
        if (k == l) r -= eta0 * x;
        if (i == l) r -= NCPoly::gen(GenClass::x, k);
        out.push_back(r);
      }
  return out;
}

std::vector<NCPoly> adjoint_limit_target(int N) {
  auto M = [](int i, int j) { return NCPoly::gen(GenClass::M, i, j); };
  std::vector<NCPoly> out;
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l <= N; ++l)
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          NCPoly K = NCPoly::gen(GenClass::K, k, l);
          out.push_back(K * M(i, j) - M(i, j) * K - delta(i, l) * M(k, j) + delta(k, j) * M(i, l));
        }
  return out;
}

} // namespace recalc
