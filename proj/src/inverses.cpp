#include "recalc/bdalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace recalc {

std::optional<std::vector<Coeff>> solve_in_span(const std::vector<NCPoly> &basis, const NCPoly &target) {
  struct Pivot {
    NCPoly row;
    std::vector<Coeff> combo;
  };
  std::size_t n = basis.size();
  std::map<Word, Pivot, DegLex> pivots;
  // reduces r (with its combination) until its leading word has no pivot
  auto reduce = [&](NCPoly &r, std::vector<Coeff> &combo) {
    while (!r.is_zero()) {
      auto it = pivots.find(r.leading_word());
      if (it == pivots.end()) return;
      Coeff c = r.coeff(it->first);
      r -= c * it->second.row;
      for (std::size_t h = 0; h < n; ++h)
        if (!it->second.combo[h].is_zero()) combo[h] -= c * it->second.combo[h];
    }
  };
  for (std::size_t h = 0; h < n; ++h) {
    NCPoly r = basis[h];
    std::vector<Coeff> combo(n);
    combo[h] = Coeff(1);
    reduce(r, combo);
    if (r.is_zero()) continue;
    Coeff lead = r.coeff(r.leading_word());
    if (!lead.is_unit()) throw PresentationError("non-invertible pivot " + lead.str() + " in linear solve");
    Coeff inv = lead.inverse();
    for (auto &c : combo) c = inv * c;
    Word w = r.leading_word();
    pivots.emplace(w, Pivot{inv * r, std::move(combo)});
  }
  NCPoly r = target;
  std::vector<Coeff> combo(n);
  reduce(r, combo);
  if (!r.is_zero()) return std::nullopt;
  for (auto &c : combo) c = -c;
  return combo;
}

namespace {

GenClass ainv_class(GenClass c) {
  switch (c) {
  case GenClass::M: return GenClass::ainvM;
  case GenClass::L: return GenClass::ainvL;
  case GenClass::T: return GenClass::ainvT;
  default: throw std::invalid_argument("no adjoined inverse for class " + class_name(c));
  }
}

std::vector<Letter> class_letters(GenClass c, int N) {
  std::vector<Letter> out;
  if (c == GenClass::x || c == GenClass::y) {
    for (int i = 1; i <= N; ++i) out.push_back(make_letter(c, i));
  } else {
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) out.push_back(make_letter(c, i, j));
  }
  return out;
}

NCPoly tagged(int block, const NCPoly &p) { return NCPoly::word(Word(1, static_cast<Letter>(block + 1))) * p; }

// Linear adjugate S with X S = S X = a I in the algebra of P (m = 2 ansatz).
PolyMatrix linear_adjugate(const QMAPresentation &P, const NCPoly &a) {
  int N = P.N;
  std::vector<NCPoly> basis_h{NCPoly(1)};
  for (Letter l : class_letters(P.cls, N)) basis_h.push_back(NCPoly::word(Word(1, l)));
  PolyMatrix X = generating_matrix(P.cls, N);
  struct Unknown {
    int p, j, h;
  };
  std::vector<Unknown> unknowns;
  std::vector<NCPoly> columns;
  for (int p = 0; p < N; ++p)
    for (int j = 0; j < N; ++j)
      for (int h = 0; h < static_cast<int>(basis_h.size()); ++h) {
        NCPoly col;
        for (int i = 0; i < N; ++i) col += tagged(i * N + j, P.normal_form(X[i][p] * basis_h[h]));
        for (int k = 0; k < N; ++k) col += tagged(N * N + p * N + k, P.normal_form(basis_h[h] * X[j][k]));
        unknowns.push_back({p, j, h});
        columns.push_back(col);
      }
  NCPoly target;
  for (int i = 0; i < N; ++i) {
    target += tagged(i * N + i, a);
    target += tagged(N * N + i * N + i, a);
  }
  auto sol = solve_in_span(columns, target);
  if (!sol) throw PresentationError("no linear adjugate for " + class_name(P.cls) + " (only m = 2 is supported)");
  PolyMatrix S(N, std::vector<NCPoly>(N));
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (!(*sol)[u].is_zero()) S[unknowns[u].p][unknowns[u].j] += (*sol)[u] * basis_h[unknowns[u].h];
  return S;
}

// Relations moving the letter d = a^{-1} past every letter g of the universe.
std::vector<NCPoly> exchange_relations(Normalizer &nf, Letter d, const NCPoly &a, const std::vector<Letter> &universe,
                                       int N) {
  std::vector<NCPoly> out;
  NCPoly dw = NCPoly::word(Word(1, d));
  for (Letter g : universe) {
    GenClass gc = letter_class(g);
    if (is_inverse_scalar_class(gc)) continue;
    NCPoly gw = NCPoly::word(Word(1, g));
    auto same = class_letters(gc, N);
    std::vector<NCPoly> basis;
    bool d_larger = letter_class(d) > gc;
    for (Letter h : same) {
      NCPoly hw = NCPoly::word(Word(1, h));
      basis.push_back(nf.normal_form(d_larger ? a * hw : hw * a));
    }
    NCPoly target = nf.normal_form(d_larger ? gw * a : a * gw);
    auto sol = solve_in_span(basis, target);
    if (!sol)
      throw PresentationError("a_m is not normal: no exchange rule for " + letter_str(d) + " and " + letter_str(g));
    NCPoly image;
    for (std::size_t k = 0; k < same.size(); ++k) image += (*sol)[k] * NCPoly::word(Word(1, same[k]));
    // g a = a tau(g)  =>  d g = tau(g) d ;  a g = sigma(g) a  =>  g d = d sigma(g)
    out.push_back(d_larger ? dw * gw - image * dw : gw * dw - dw * image);
  }
  return out;
}

NCPoly inverse_pair_relation(Normalizer &nf, const InverseData &x, const InverseData &y) {
  const InverseData &big = letter_class(x.letter) > letter_class(y.letter) ? x : y;
  const InverseData &small = &big == &x ? y : x;
  NCPoly ab = nf.normal_form(big.a * small.a), ba = nf.normal_form(small.a * big.a);
  auto sol = solve_in_span({ba}, ab);
  if (!sol) throw PresentationError("a_m(X) and a_m(Y) are not proportional under exchange");
  NCPoly D = NCPoly::word(Word(1, big.letter)), d = NCPoly::word(Word(1, small.letter));
  return D * d - (*sol)[0] * (d * D);
}

InverseData make_inverse(const QMAPresentation &part) {
  if (part.m < 1) throw NotGLType("inverse extension needs a GL(m)-type R-matrix");
  InverseData inv;
  inv.matrix_cls = part.cls;
  inv.letter = make_letter(ainv_class(part.cls));
  inv.a = elem_sym(part, part.m);
  inv.adj = linear_adjugate(part, inv.a);
  return inv;
}

} // namespace

BDPresentation extend_with_inverses(const BDPresentation &P, const std::vector<GenClass> &classes) {
  BDPresentation out = P;
  std::vector<InverseData> added;
  for (GenClass c : classes) {
    if (out.inverses.count(c)) continue;
    const QMAPresentation *part = nullptr;
    if (c == P.op_cls) part = &P.op_part;
    else if (P.fn_part && c == P.fn_cls) part = &*P.fn_part;
    if (!part) throw std::invalid_argument("class " + class_name(c) + " has no RE/QM part to invert");
    added.push_back(make_inverse(*part));
    out.inverses.emplace(c, added.back());
  }
  std::vector<Letter> universe;
  for (GenClass c : {P.fn_cls, P.op_cls})
    for (Letter l : class_letters(c, P.N)) universe.push_back(l);
  for (const auto &inv : added) {
    auto rels = exchange_relations(*P.nf, inv.letter, inv.a, universe, P.N);
    out.extra_relations.insert(out.extra_relations.end(), rels.begin(), rels.end());
  }
  std::vector<const InverseData *> all;
  for (const auto &[c, inv] : out.inverses) all.push_back(&inv);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      out.extra_relations.push_back(inverse_pair_relation(*P.nf, *all[i], *all[j]));
  out.rebuild();
  return out;
}

PolyMatrix inverse_matrix(const BDPresentation &P, GenClass cls) {
  auto it = P.inverses.find(cls);
  if (it == P.inverses.end()) throw std::invalid_argument(class_name(cls) + " inverse not adjoined");
  PolyMatrix r = it->second.adj;
  NCPoly d = NCPoly::word(Word(1, it->second.letter));
  for (auto &row : r)
    for (auto &e : row) e = e * d;
  return r;
}

GeneratorResolver inverse_resolver(const BDPresentation &P) {
  return [&P](GenClass c, int i, int j, NCPoly &out) {
    GenClass base;
    if (c == GenClass::Minv) base = GenClass::M;
    else if (c == GenClass::Linv) base = GenClass::L;
    else if (c == GenClass::Tinv) base = GenClass::T;
    else return false;
    if (!P.inverses.count(base)) return false;
    if (i < 1 || j < 1 || i > P.N || j > P.N) throw ParseError("inverse index out of range", 0);
    out = inverse_matrix(P, base)[i - 1][j - 1];
    return true;
  };
}

NCPoly cleared_residual(const BDPresentation &P, const NCPoly &p) {
  NCPoly n = P.normal_form(p);
  if (P.inverses.empty() || n.is_zero()) return n;
  std::vector<const InverseData *> invs;
  for (const auto &[c, inv] : P.inverses) invs.push_back(&inv);
  std::sort(invs.begin(), invs.end(), [](auto *a, auto *b) { return a->letter < b->letter; });
  std::vector<int> maxexp(invs.size(), 0);
  for (const auto &[w, c] : n.terms())
    for (std::size_t k = 0; k < invs.size(); ++k)
      maxexp[k] = std::max<int>(maxexp[k], static_cast<int>(std::count(w.begin(), w.end(), invs[k]->letter)));
  std::vector<std::vector<NCPoly>> powers(invs.size());
  for (std::size_t k = 0; k < invs.size(); ++k) {
    powers[k].push_back(NCPoly(1));
    for (int e = 1; e <= maxexp[k]; ++e) powers[k].push_back(powers[k].back() * invs[k]->a);
  }
  PolyAccumulator acc;
  for (const auto &[w, c] : n.terms()) {
    NCPoly term(c);
    Word run;
    std::size_t next = 0;
    auto flush_until = [&](int cls) {
      while (next < invs.size() && static_cast<int>(letter_class(invs[next]->letter)) <= cls) {
        int e = static_cast<int>(std::count(w.begin(), w.end(), invs[next]->letter));
        term = term * NCPoly::word(run) * powers[next][maxexp[next] - e];
        run.clear();
        ++next;
      }
    };
    for (Letter l : w) {
      flush_until(static_cast<int>(letter_class(l)));
      if (!is_inverse_scalar_class(letter_class(l))) run.push_back(l);
    }
    flush_until(1 << 20);
    acc.add(term * NCPoly::word(run));
  }
  return P.normal_form(acc.take());
}

bool is_zero_in(const BDPresentation &P, const NCPoly &p) { return cleared_residual(P, p).is_zero(); }

std::vector<NCPoly> rtt_covariance_residual(const BDPresentation &P, bool corrupt) {
  if (P.fn_cls != GenClass::x) throw std::invalid_argument("covariance check needs a vector flavor");
  QMAPresentation rtt = rtt_instance(P.R);
  BDPresentation C = P;
  C.extra_relations.insert(C.extra_relations.end(), rtt.relations.begin(), rtt.relations.end());
  for (Letter t : class_letters(GenClass::T, P.N))
    for (Letter g : C.letters())
      C.extra_relations.push_back(NCPoly::word(Word{g, t}) - NCPoly::word(Word{t, g}));
  C.rebuild();
  InverseData inv = make_inverse(rtt);
  std::vector<Letter> universe = class_letters(GenClass::T, P.N);
  for (GenClass c : {P.fn_cls, P.op_cls})
    for (Letter l : class_letters(c, P.N)) universe.push_back(l);
  auto rels = exchange_relations(*C.nf, inv.letter, inv.a, universe, P.N);
  C.extra_relations.insert(C.extra_relations.end(), rels.begin(), rels.end());
  C.inverses.emplace(GenClass::T, inv);
  C.rebuild();

  PolyMatrix S = inv.adj;
  if (corrupt) S[0][0] = Coeff(2) * S[0][0];
  NCPoly d = NCPoly::word(Word(1, inv.letter));
  int N = P.N;
  auto delta = [&](Letter l) -> NCPoly {
    GenClass c = letter_class(l);
    int i = letter_i(l) - 1, j = letter_j(l) - 1;
    NCPoly out;
    if (c == GenClass::x) {
      for (int k = 0; k < N; ++k) out += NCPoly::gen(GenClass::T, i + 1, k + 1) * NCPoly::gen(GenClass::x, k + 1);
    } else if (c == GenClass::L) {
      for (int k = 0; k < N; ++k)
        for (int p = 0; p < N; ++p)
          out += NCPoly::gen(GenClass::T, i + 1, k + 1) * S[p][j] * d * NCPoly::gen(GenClass::L, k + 1, p + 1);
    } else {
      out = NCPoly::word(Word(1, l));
    }
    return out;
  };
  std::vector<NCPoly> out;
  for (const NCPoly &rel : P.ofp_relations) {
    NCPoly r = cleared_residual(C, rel.substitute(delta));
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

} // namespace recalc
