#include "recalc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace recalc {

namespace {

using Body = std::function<std::string()>;

std::string first_nonzero(const std::vector<NCPoly> &v) {
  for (const auto &p : v)
    if (!p.is_zero()) return p.str();
  return "";
}

std::string first_nonzero(const PolyMatrix &m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (!m[i][j].is_zero()) return "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] " + m[i][j].str();
  return "";
}

std::string first_nonzero(const QMatrix &m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return "(" + std::to_string(i) + "," + std::to_string(j) + ") " + m(i, j).str();
  return "";
}

std::string conf_witness(const RewriteSystem &sys) {
  auto w = confluence_residuals(sys);
  return w.empty() ? "" : "ambiguity " + word_str(w[0].word) + ": " + w[0].difference.str();
}

class Runner {
public:
  explicit Runner(Report &r) : report_(r) {}

  void run(const std::string &name, const std::string &anchor, const Body &body) {
    CheckRecord rec{name, anchor, CheckStatus::fail, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      rec.witness = body();
      rec.status = rec.witness.empty() ? CheckStatus::pass : CheckStatus::fail;
    } catch (const BudgetExceeded &e) {
      rec.status = CheckStatus::budget_exhausted;
      rec.witness = e.what();
    } catch (const std::exception &e) {
      rec.witness = std::string("error: ") + e.what();
    }
    rec.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(rec));
  }

  // Builds a shared object once; a failed build is recorded as its own check.
  template <class T>
  std::shared_ptr<T> build(const std::string &name, const std::function<T()> &make) {
    std::shared_ptr<T> out;
    run(name + "/construct", "presentation builds", [&] {
      out = std::make_shared<T>(make());
      return std::string();
    });
    return out;
  }

private:
  Report &report_;
};

void rmatrix_suite(Runner &run, const ROperator &R) {
  run.run("rmatrix/ybe", "Yang-Baxter equation", [&] { return first_nonzero(ybe_residual(R).m); });
  run.run("rmatrix/hecke", "Hecke condition", [&] { return first_nonzero(hecke_residual(R).m); });
  run.run("rmatrix/skew_inverse", "skew-inverse contractions", [&] {
    auto [a, b] = skew_inverse_residuals(R, skew_inverse(R));
    std::string w = first_nonzero(a);
    return w.empty() ? first_nonzero(b) : w;
  });
  run.run("rmatrix/brc", "B and C operator identities", [&] {
    auto [a, b] = brc_residuals(R, bc_operators(R, skew_inverse(R)));
    std::string w = first_nonzero(a);
    return w.empty() ? first_nonzero(b) : w;
  });
  run.run("rmatrix/gl_type", "rank-one antisymmetrizer and vanishing next one", [&] {
    int m = gl_type(R, R.N + 1);
    return m == R.N ? std::string() : "GL(" + std::to_string(m) + ") type, expected GL(" + std::to_string(R.N) + ")";
  });
  run.run("rmatrix/bc_product", "B C = q^{-2m} I", [&] {
    int m = gl_type(R, R.N + 1);
    TraceForm tf = bc_operators(R, skew_inverse(R));
    return first_nonzero(tf.b * tf.c - R.deform.pow(-2 * m) * QMatrix::identity(R.N));
  });
}

void qmalg_suite(Runner &run, const ROperator &R) {
  auto rea = run.build<QMAPresentation>("qmalg/rea", [&] { return rea_instance(R); });
  auto rtt = run.build<QMAPresentation>("qmalg/rtt", [&] { return rtt_instance(R); });
  for (auto [name, P] : {std::pair{"rea", rea}, {"rtt", rtt}}) {
    if (!P) continue;
    std::string pre = std::string("qmalg/") + name;
    run.run(pre + "/confluent", "degree-3 overlaps resolve", [P = P] { return conf_witness(*P->system); });
    for (int k = 1; k <= 2; ++k)
      run.run(pre + "/newton_" + std::to_string(k), "quantum Newton identities",
              [P = P, k] { return first_nonzero(std::vector<NCPoly>{newton_residual(*P, k)}); });
    run.run(pre + "/power_sums_commute", "commutative characteristic subalgebra", [P = P] {
      NCPoly a = power_sum(*P, 1), b = power_sum(*P, 2);
      NCPoly e = elem_sym(*P, 1), f = elem_sym(*P, 2);
      return first_nonzero(std::vector<NCPoly>{P->normal_form(a * b - b * a), P->normal_form(e * f - f * e)});
    });
    run.run(pre + "/cayley_hamilton", "Cayley-Hamilton identity",
            [P = P] { return first_nonzero(cayley_hamilton_residual(*P)); });
    run.run(pre + "/copies", "relations hold for consecutive copies",
            [P = P] { return first_nonzero(consecutive_copy_residuals(*P)); });
  }
  if (rea) {
    run.run("qmalg/rea/power_sums_central", "power sums central in the RE algebra", [rea] {
      std::string w;
      for (int k = 1; k <= 2 && w.empty(); ++k) w = first_nonzero(centrality_residual(*rea, power_sum(*rea, k)));
      return w;
    });
    run.run("qmalg/rea/powers_plain", "quantum powers are ordinary matrix powers", [rea] {
      std::string w;
      for (int k = 1; k <= rea->m + 1 && w.empty(); ++k) {
        PolyMatrix a = matrix_power_over(*rea, k), b = matrix_power_plain(*rea, k);
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < a.size(); ++j) a[i][j] = rea->normal_form(a[i][j] - b[i][j]);
        w = first_nonzero(a);
      }
      return w;
    });
  }
}

void common_bd_checks(Runner &run, const std::string &pre, const std::shared_ptr<BDPresentation> &P) {
  run.run(pre + "/confluent", "degree-3 overlaps resolve", [P] { return conf_witness(*P->system); });
  run.run(pre + "/unit_action", "operators act on 1 by the counit", [P] {
    for (Letter l : P->letters()) {
      if (!is_operator_class(letter_class(l))) continue;
      NCPoly r = act(*P, NCPoly::word(Word(1, l)), NCPoly(1)) - NCPoly(op_counit(*P, l));
      if (!r.is_zero()) return letter_str(l) + ": " + r.str();
    }
    return std::string();
  });
  if (!P->fn_relations.empty())
    run.run(pre + "/wellposed", "action respects the function relations",
            [P] { return first_nonzero(action_wellposed_residual(*P)); });
}

void bd_suite(Runner &run, const std::string &suite, const ROperator &R, const Coeff &eta) {
  std::string pre = suite;
  std::function<BDPresentation()> make;
  if (suite == "bd_free") make = [&] { return bd_free(R, eta); };
  if (suite == "bd_qplane") make = [&] { return bd_quantum_plane(R, eta); };
  if (suite == "bd_extplane") make = [&] { return bd_ext_plane(R, eta); };
  if (suite == "bd_covector") make = [&] { return bd_covector(R, eta.inverse()); };
  if (suite == "bd_adjoint") make = [&] { return bd_adjoint(R); };
  if (suite == "bd_rightinv") make = [&] { return bd_right_invariant(R, R, eta); };
  auto P = run.build<BDPresentation>(pre, make);
  if (!P) return;
  common_bd_checks(run, pre, P);
  if (suite == "bd_free" || suite == "bd_rightinv")
    for (int p = 1; p <= 3; ++p)
      run.run(pre + "/action_order_" + std::to_string(p), "order-p action carries eta^p",
              [P, p] { return first_nonzero(p_order_action_residual(*P, p)); });
  if (suite == "bd_qplane")
    run.run(pre + "/rtt_covariance", "covariance under the RTT coaction",
            [P] { return first_nonzero(rtt_covariance_residual(*P)); });
  if (suite == "bd_adjoint" || suite == "bd_covector")
    run.run(pre + "/degree_one_action", "degree-one action", [P] { return first_nonzero(degree_one_action_residual(*P)); });
  if (suite == "bd_adjoint")
    run.run(pre + "/traces_central", "R-traces of M powers are central", [P] {
      std::string w;
      for (int k = 1; k <= std::max(1, P->m) && w.empty(); ++k) w = first_nonzero(trace_commutators(*P, k));
      return w;
    });
  if (suite == "bd_rightinv")
    run.run(pre + "/traces_not_central", "R-traces of M are not central here", [P] {
      return trace_commutators(*P, 1).empty() ? std::string("every commutator with Tr_R(M) vanishes") : std::string();
    });
}

void qn_suite(Runner &run, const ROperator &R, const Coeff &eta) {
  auto X = run.build<BDPresentation>("qn", [&] {
    return extend_with_inverses(bd_right_invariant(R, R, eta), {GenClass::M, GenClass::L});
  });
  if (!X) return;
  auto qn = run.build<QNMatrices>("qn/matrices", [&] { return qn_matrices(*X); });
  if (!qn) return;
  run.run("qn/confluent", "inverse-extended system resolves degree-3 overlaps", [X] { return conf_witness(*X->system); });
  std::vector<NamedResidual> props;
  run.run("qn/props_computed", "Q-M and N-M identities evaluated", [&] {
    props = prop_qm_residual(*X, *qn);
    return std::string();
  });
  for (const auto &p : props) {
    std::string name = "qn/" + p.name;
    if (p.budget_exhausted)
      run.run(name, "Q/N exchange identities", [name]() -> std::string {
        throw BudgetExceeded("degree budget exhausted in " + name, {});
      });
    else
      run.run(name, "Q/N exchange identities", [p] { return first_nonzero(p.nonzero); });
  }
  run.run("qn/q_unit", "Q acts on 1 by xi = eta^-1 q^2m", [X, qn] { return first_nonzero(q_unit_action(*X, *qn)); });
  for (auto [k, p] : {std::pair{1, 1}, {1, 2}})
    run.run("qn/q_action_" + std::to_string(k) + "_" + std::to_string(p), "Q action on M-polynomials",
            [X, qn, k = k, p = p] { return first_nonzero(q_action_residual(*X, k, p, &qn->Q, expected_xi(*X))); });
}

void sphere_suite(Runner &run, const ROperator &R, const std::optional<OrbitConfig> &orbit) {
  Coeff xi = Coeff::param(Param::xi);
  if (!orbit || orbit->r_symbolic) {
    std::vector<StageResult> stages;
    run.run("sphere/chain", "GL(2) sphere chain runs", [&] {
      stages = gl2_sphere(R, Coeff::param(Param::r), xi);
      return std::string();
    });
    for (const auto &s : stages) run.run("sphere/" + s.name, "GL(2) sphere example", [s] { return s.witness; });
    return;
  }
  auto B = run.build<BDPresentation>("sphere/adjoint", [&] { return bd_adjoint(R, GenClass::Q, xi); });
  if (!B) return;
  OrbitSpec spec{orbit->c};
  auto O = run.build<BDPresentation>("sphere/orbit", [&] { return orbit_quotient(*B, spec); });
  if (!O) return;
  run.run("sphere/orbit_confluent", "orbit quotient resolves degree-3 overlaps", [O] { return conf_witness(*O->system); });
  run.run("sphere/orbit_inverse", "Cayley-Hamilton inverse on the orbit", [B, O, spec] {
    PolyMatrix prod = poly_mul(generating_matrix(GenClass::M, B->N), orbit_inverse(*B, spec));
    for (std::size_t i = 0; i < prod.size(); ++i)
      for (std::size_t j = 0; j < prod.size(); ++j)
        prod[i][j] = O->fn_nf->normal_form(prod[i][j] - NCPoly(i == j ? 1 : 0));
    return first_nonzero(prod);
  });
}

void climit_suite(Runner &run, int N) {
  std::vector<StageResult> stages;
  run.run("climit/computed", "classical limits evaluated", [&] {
    stages = classical_limit_checks(N);
    return std::string();
  });
  for (const auto &s : stages) run.run("climit/" + s.name, "classical limit", [s] { return s.witness; });
}

} // namespace

Report run_suite(const SuiteConfig &config) {
  set_default_rewrite_budget(config.degree_budget);
  Report report;
  Runner run(report);
  ROperator R;
  bool have_r = false;
  run.run("rmatrix/load", "R-matrix source", [&] {
    R = load_rmatrix(config.rmatrix);
    have_r = true;
    return std::string();
  });
  Coeff eta = config.eta_value ? *config.eta_value : Coeff::param(Param::eta);
  if (have_r)
    for (const auto &s : config.suites) {
      if (s == "rmatrix") rmatrix_suite(run, R);
      else if (s == "qmalg") qmalg_suite(run, R);
      else if (s.rfind("bd_", 0) == 0) bd_suite(run, s, R, eta);
      else if (s == "qn_props") qn_suite(run, R, eta);
      else if (s == "sphere") sphere_suite(run, R, config.orbit);
      else if (s == "climit") climit_suite(run, R.N);
    }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckRecord &a, const CheckRecord &b) { return a.name < b.name; });
  return report;
}

} // namespace recalc
