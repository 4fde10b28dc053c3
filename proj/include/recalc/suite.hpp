#ifndef RECALC_SUITE_HPP
#define RECALC_SUITE_HPP

#include "recalc/climit.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recalc {

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct RMatrixSource {
  std::string kind = "dj"; // dj, flip or file
  int N = 2;
  std::string path;
};

struct OrbitConfig {
  bool r_symbolic = true;
  std::vector<Coeff> c; // Tr_R(M^k) = c_k when not r_symbolic
};

struct SuiteConfig {
  RMatrixSource rmatrix;
  std::vector<std::string> suites; // in run order
  long degree_budget = 1000000;
  std::optional<Coeff> eta_value;  // symbolic eta when empty
  std::optional<OrbitConfig> orbit;
  std::string output = "text";     // text or json
};

const std::vector<std::string> &all_suites();
// key = value lines, '#' comments.  Keys: rmatrix_source (dj:N, flip:N,
// file:path), suites (comma list or "all"), degree_budget, eta_mode
// (symbolic or value:<coefficient>), orbit (r_symbolic or c:<c1>,<c2>,...),
// output (text or json).
SuiteConfig parse_config(const std::string &text);
RMatrixSource parse_rmatrix_source(const std::string &text);
ROperator load_rmatrix(const RMatrixSource &src);

enum class CheckStatus { pass, fail, budget_exhausted };
std::string status_name(CheckStatus s);

struct CheckRecord {
  std::string name;
  std::string anchor;  // what identity the check verifies
  CheckStatus status = CheckStatus::fail;
  std::string witness; // first nonzero residual or error, empty on pass
  double wall_time_ms = 0;
  friend bool operator==(const CheckRecord &, const CheckRecord &) = default;
};

struct Report {
  std::vector<CheckRecord> checks; // sorted by name
  int count(CheckStatus s) const;
  bool all_pass() const { return count(CheckStatus::pass) == static_cast<int>(checks.size()); }
  friend bool operator==(const Report &, const Report &) = default;
};

Report run_suite(const SuiteConfig &config);
nlohmann::json to_json(const Report &r);
Report report_from_json(const nlohmann::json &j);
std::string to_text(const Report &r);

// Presentation specs for normalize/act: "<kind>" or "<kind>:<rmatrix source>",
// kind one of rea, rtt, bd_free, bd_qplane, bd_extplane, bd_covector,
// bd_adjoint, bd_rightinv, bd_qn (right-invariant with M and L inverses).
struct LoadedPresentation {
  std::optional<QMAPresentation> qma;
  std::optional<BDPresentation> bd;
  GeneratorResolver resolver;
  NCPoly normal_form(const NCPoly &p) const;
};
LoadedPresentation load_presentation(const std::string &spec, const Coeff &eta = Coeff::param(Param::eta));
std::string normalize_text(const LoadedPresentation &P, const std::string &poly);
std::string act_text(const LoadedPresentation &P, const std::string &op, const std::string &fn);

} // namespace recalc

#endif
