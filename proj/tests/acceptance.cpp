// One line per acceptance criterion; every residual must be exactly zero.
#include "recalc/suite.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace recalc;

namespace {

using Witness = std::string;

Coeff eta() { return Coeff::param(Param::eta); }

Witness nz(const std::string &where, const std::vector<NCPoly> &v) {
  for (const auto &p : v)
    if (!p.is_zero()) return where + ": " + p.str();
  return "";
}

Witness nz(const std::string &where, const PolyMatrix &m) {
  std::vector<NCPoly> flat;
  for (const auto &row : m) flat.insert(flat.end(), row.begin(), row.end());
  return nz(where, flat);
}

Witness nz(const std::string &where, const QMatrix &m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return where + ": entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
  return "";
}

Witness conf(const std::string &where, const RewriteSystem &sys) {
  auto w = confluence_residuals(sys);
  return w.empty() ? "" : where + ": ambiguity " + word_str(w[0].word);
}

Witness stages(const std::string &where, const std::vector<StageResult> &s) {
  for (const auto &st : s)
    if (!st.pass) return where + " / " + st.name + ": " + st.witness;
  return "";
}

Witness rmatrix_layer() {
  std::vector<std::pair<std::string, ROperator>> rs{{"dj2", make_dj(2)}, {"dj3", make_dj(3)}, {"flip2", make_flip(2)}};
  for (const auto &[name, R] : rs) {
    if (!ybe_residual(R).m.is_zero()) return name + ": YBE";
    if (!hecke_residual(R).m.is_zero()) return name + ": Hecke";
    ROperator psi = skew_inverse(R);
    auto [a, b] = skew_inverse_residuals(R, psi);
    if (auto w = nz(name + " skew inverse", a); !w.empty()) return w;
    if (auto w = nz(name + " skew inverse", b); !w.empty()) return w;
    TraceForm tf = bc_operators(R, psi);
    auto [c, d] = brc_residuals(R, tf);
    if (auto w = nz(name + " BRC", c); !w.empty()) return w;
    if (auto w = nz(name + " BRC", d); !w.empty()) return w;
    if (name != "flip2")
      if (auto w = nz(name + " BC", tf.b * tf.c - QScalar::q(-2 * R.N) * QMatrix::identity(R.N)); !w.empty())
        return w;
  }
  return "";
}

Witness gl_detection() {
  for (int N : {2, 3})
    if (int m = gl_type(make_dj(N), N + 1); m != N) return "dj" + std::to_string(N) + ": m = " + std::to_string(m);
  return "";
}

NCPoly random_poly(std::mt19937 &rng, const std::vector<Letter> &letters) {
  std::uniform_int_distribution<int> nterms(1, 4), len(0, 3), coef(-3, 3), qexp(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  NCPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    Word w;
    for (int l = len(rng); l > 0; --l) w.push_back(letters[pick(rng)]);
    p.add_term(w, Coeff(coef(rng)) * Coeff(QScalar::q(qexp(rng))));
  }
  return p;
}

Witness rewriting() {
  ROperator R = make_dj(2);
  QMAPresentation rea = rea_instance(R), rtt = rtt_instance(R);
  if (auto w = conf("REA", *rea.system); !w.empty()) return w;
  if (auto w = conf("RTT", *rtt.system); !w.empty()) return w;
  std::vector<std::pair<std::string, BDPresentation>> bds{{"free", bd_free(R, eta())},
                                                          {"qplane", bd_quantum_plane(R, eta())},
                                                          {"extplane", bd_ext_plane(R, eta())},
                                                          {"covector", bd_covector(R, eta().inverse())},
                                                          {"adjoint", bd_adjoint(R)},
                                                          {"rightinv", bd_right_invariant(R, R, eta())}};
  for (const auto &[name, P] : bds) {
    if (auto w = conf(name, *P.system); !w.empty()) return w;
    if (auto w = conf(name + " functions", *P.fn_system); !w.empty()) return w;
  }
  std::mt19937 rng(20240601);
  for (const auto &[name, P] : bds) {
    std::vector<Letter> letters = P.letters();
    for (int i = 0; i < 20; ++i) {
      NCPoly a = random_poly(rng, letters), b = random_poly(rng, letters);
      NCPoly na = P.normal_form(a);
      if (!(P.normal_form(na) == na)) return name + ": not idempotent on " + a.str();
      NCPoly lin = P.normal_form(a + Coeff(3) * b) - na - Coeff(3) * P.normal_form(b);
      if (!lin.is_zero()) return name + ": not linear, " + lin.str();
    }
  }
  return "";
}

Witness characteristic() {
  ROperator R = make_dj(2);
  for (auto [name, P] : {std::pair{"RTT", rtt_instance(R)}, {"REA", rea_instance(R)}}) {
    for (int k = 1; k <= 2; ++k)
      if (auto r = newton_residual(P, k); !r.is_zero()) return std::string(name) + " Newton " + std::to_string(k);
    NCPoly p1 = power_sum(P, 1), p2 = power_sum(P, 2), a1 = elem_sym(P, 1), a2 = elem_sym(P, 2);
    if (auto w = nz(std::string(name) + " [p1,p2], [a1,a2]",
                    {P.normal_form(p1 * p2 - p2 * p1), P.normal_form(a1 * a2 - a2 * a1)});
        !w.empty())
      return w;
    if (std::string(name) == "REA")
      for (const auto &p : {p1, p2})
        if (auto w = nz("REA centrality", centrality_residual(P, p)); !w.empty()) return w;
  }
  return "";
}

Witness cayley_hamilton() {
  ROperator R = make_dj(2);
  QMAPresentation rea = rea_instance(R), rtt = rtt_instance(R);
  if (auto w = nz("REA", cayley_hamilton_residual(rea)); !w.empty()) return w;
  if (auto w = nz("RTT", cayley_hamilton_residual(rtt)); !w.empty()) return w;
  for (int k = 1; k <= 3; ++k) {
    PolyMatrix a = matrix_power_over(rea, k), b = matrix_power_plain(rea, k);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) a[i][j] = rea.normal_form(a[i][j] - b[i][j]);
    if (auto w = nz("REA power " + std::to_string(k), a); !w.empty()) return w;
  }
  return "";
}

Witness bd_actions() {
  ROperator R = make_dj(2);
  BDPresentation free = bd_free(R, eta());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      NCPoly r = act(free, NCPoly::gen(GenClass::L, i, j), NCPoly(1)) - NCPoly(i == j ? 1 : 0);
      if (!r.is_zero()) return "L |> 1: " + r.str();
    }
  for (int p = 1; p <= 3; ++p)
    if (auto w = nz("free order " + std::to_string(p), p_order_action_residual(free, p)); !w.empty()) return w;
  std::vector<std::pair<std::string, BDPresentation>> bds{{"qplane", bd_quantum_plane(R, eta())},
                                                          {"extplane", bd_ext_plane(R, eta())},
                                                          {"covector", bd_covector(R, eta().inverse())},
                                                          {"adjoint", bd_adjoint(R)},
                                                          {"rightinv", bd_right_invariant(R, R, eta())}};
  for (const auto &[name, P] : bds)
    if (auto w = nz(name + " well-posed", action_wellposed_residual(P)); !w.empty()) return w;
  return nz("qplane RTT covariance", rtt_covariance_residual(bds[0].second));
}

Witness centrality() {
  ROperator R = make_dj(2);
  BDPresentation ad = bd_adjoint(R);
  for (int k = 1; k <= 2; ++k)
    if (auto w = nz("adjoint Tr_R(M^" + std::to_string(k) + ")", trace_commutators(ad, k)); !w.empty()) return w;
  BDPresentation ri = bd_right_invariant(R, R, eta());
  if (trace_commutators(ri, 1).empty() && trace_commutators(ri, 2).empty())
    return "right-invariant: no nonzero commutator with the traces";
  return "";
}

Witness q_layer() {
  ROperator R = make_dj(2);
  BDPresentation X = extend_with_inverses(bd_right_invariant(R, R, eta()), {GenClass::M, GenClass::L});
  QNMatrices qn = qn_matrices(X);
  Coeff xi = expected_xi(X);
  if (!(xi == eta().inverse() * Coeff(QScalar::q(4)))) return "xi = " + xi.str();
  if (auto w = nz("Q |> 1", q_unit_action(X, qn)); !w.empty()) return w;
  if (auto w = conf("inverse-extended", *X.system); !w.empty()) return w;
  for (const auto &r : prop_qm_residual(X, qn)) {
    if (r.budget_exhausted) return r.name + ": budget exhausted";
    if (auto w = nz(r.name, r.nonzero); !w.empty()) return w;
  }
  for (auto [k, p] : {std::pair{1, 1}, {1, 2}})
    if (auto w = nz("Q action (" + std::to_string(k) + "," + std::to_string(p) + ")",
                    q_action_residual(X, k, p, &qn.Q, xi));
        !w.empty())
      return w;
  return "";
}

Witness sphere() {
  ROperator R = make_dj(2);
  Coeff r = Coeff::param(Param::r), xi = Coeff::param(Param::xi);
  if (auto w = stages("sphere", gl2_sphere(R, r, xi)); !w.empty()) return w;
  // M^-1 = -r^-2 M as an explicit matrix
  BDPresentation B = bd_adjoint(R, GenClass::Q, xi);
  OrbitSpec spec = sphere_orbit(r);
  BDPresentation O = orbit_quotient(B, spec);
  PolyMatrix inv = orbit_inverse(B, spec), M = generating_matrix(GenClass::M, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) inv[i][j] = O.normal_form(inv[i][j] + (r * r).inverse() * M[i][j]);
  return nz("M^-1 + r^-2 M", inv);
}

Witness classical() {
  for (int N : {2, 3})
    if (auto w = stages("N=" + std::to_string(N), classical_limit_checks(N)); !w.empty()) return w;
  return "";
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Witness()>>> criteria{
      {"R-matrix layer", rmatrix_layer},
      {"GL-type detection", gl_detection},
      {"rewriting soundness", rewriting},
      {"characteristic subalgebra", characteristic},
      {"Cayley-Hamilton", cayley_hamilton},
      {"BD actions", bd_actions},
      {"centrality dichotomy", centrality},
      {"Q-layer", q_layer},
      {"GL(2) sphere chain", sphere},
      {"classical limits", classical},
  };
  int failed = 0, n = 0;
  for (const auto &[name, check] : criteria) {
    ++n;
    auto t0 = std::chrono::steady_clock::now();
    Witness w;
    try {
      w = check();
    } catch (const std::exception &e) {
      w = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (w.empty() ? "PASS" : "FAIL") << "  criterion " << n << ": " << name << "  (" << secs << " s)";
    if (!w.empty()) std::cout << "  -- " << w;
    std::cout << "\n";
    failed += !w.empty();
  }
  std::cout << (n - failed) << "/" << n << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
