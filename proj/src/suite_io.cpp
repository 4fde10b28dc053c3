#include "recalc/suite.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace recalc {

const std::vector<std::string> &all_suites() {
  static const std::vector<std::string> s{"rmatrix",     "qmalg",      "bd_free",     "bd_qplane",
                                          "bd_extplane", "bd_covector", "bd_adjoint", "bd_rightinv",
                                          "qn_props",    "sphere",      "climit"};
  return s;
}

namespace {

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

int parse_int(const std::string &s, const std::string &what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::exception &) {
    throw ConfigError(what + ": expected an integer, got '" + s + "'");
  }
}

Coeff coeff_or_throw(const std::string &s, const std::string &what) {
  try {
    return parse_coeff(s);
  } catch (const std::exception &e) {
    throw ConfigError(what + ": " + e.what());
  }
}

} // namespace

RMatrixSource parse_rmatrix_source(const std::string &text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("rmatrix_source: expected dj:N, flip:N or file:path");
  RMatrixSource src;
  src.kind = trim(text.substr(0, colon));
  std::string arg = trim(text.substr(colon + 1));
  if (src.kind == "dj" || src.kind == "flip") {
    src.N = parse_int(arg, "rmatrix_source");
    if (src.N < 2 || src.N > 4) throw ConfigError("rmatrix_source: N must be between 2 and 4");
  } else if (src.kind == "file") {
    if (arg.empty()) throw ConfigError("rmatrix_source: empty file path");
    src.path = arg;
  } else {
    throw ConfigError("rmatrix_source: unknown kind '" + src.kind + "'");
  }
  return src;
}

ROperator load_rmatrix(const RMatrixSource &src) {
  if (src.kind == "dj") return make_dj(src.N);
  if (src.kind == "flip") return make_flip(src.N);
  std::ifstream in(src.path);
  if (!in) throw ConfigError("cannot open R-matrix file " + src.path);
  std::stringstream buf;
  buf << in.rdbuf();
  ROperator r;
  try {
    r = read_rmatrix(buf.str());
  } catch (const std::exception &e) {
    throw ConfigError("R-matrix file " + src.path + ": " + e.what());
  }
  if (r.N > 4) throw ConfigError("R-matrix file " + src.path + ": N must be at most 4");
  return validated(r);
}

SuiteConfig parse_config(const std::string &text) {
  SuiteConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "rmatrix_source") {
      cfg.rmatrix = parse_rmatrix_source(value);
    } else if (key == "suites") {
      cfg.suites.clear();
      std::vector<std::string> wanted = value == "all" ? all_suites() : split(value, ',');
      for (const auto &s : wanted)
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
          throw ConfigError("suites: unknown suite '" + s + "'");
      // run in dependency order regardless of listing order
      for (const auto &s : all_suites())
        if (std::find(wanted.begin(), wanted.end(), s) != wanted.end()) cfg.suites.push_back(s);
    } else if (key == "degree_budget") {
      cfg.degree_budget = parse_int(value, "degree_budget");
      if (cfg.degree_budget <= 0) throw ConfigError("degree_budget must be positive");
    } else if (key == "eta_mode") {
      if (value == "symbolic") {
        cfg.eta_value.reset();
      } else if (value.rfind("value:", 0) == 0) {
        cfg.eta_value = coeff_or_throw(value.substr(6), "eta_mode");
        if (!cfg.eta_value->is_unit()) throw ConfigError("eta_mode: eta must be a nonzero monomial");
      } else {
        throw ConfigError("eta_mode: expected symbolic or value:<coefficient>");
      }
    } else if (key == "orbit") {
      OrbitConfig o;
      if (value == "r_symbolic") {
        o.r_symbolic = true;
      } else if (value.rfind("c:", 0) == 0) {
        o.r_symbolic = false;
        for (const auto &c : split(value.substr(2), ',')) o.c.push_back(coeff_or_throw(c, "orbit"));
        if (o.c.empty()) throw ConfigError("orbit: empty c-list");
      } else {
        throw ConfigError("orbit: expected r_symbolic or c:<c1>,<c2>,...");
      }
      cfg.orbit = o;
    } else if (key == "output") {
      if (value != "text" && value != "json") throw ConfigError("output: expected text or json");
      cfg.output = value;
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (cfg.suites.empty()) cfg.suites = all_suites();
  return cfg;
}

std::string status_name(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass:
    return "pass";
  case CheckStatus::fail:
    return "fail";
  case CheckStatus::budget_exhausted:
    return "budget_exhausted";
  }
  return "fail";
}

namespace {

CheckStatus status_from_name(const std::string &s) {
  for (CheckStatus c : {CheckStatus::pass, CheckStatus::fail, CheckStatus::budget_exhausted})
    if (status_name(c) == s) return c;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

} // namespace

int Report::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const CheckRecord &c) { return c.status == s; }));
}

nlohmann::json to_json(const Report &r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"paper_anchor", c.anchor}, {"status", status_name(c.status)},
                     {"wall_time_ms", c.wall_time_ms}};
    j["witness"] = c.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.witness);
    checks.push_back(std::move(j));
  }
  return {{"checks", checks},
          {"summary",
           {{"total", r.checks.size()},
            {"pass", r.count(CheckStatus::pass)},
            {"fail", r.count(CheckStatus::fail)},
            {"budget_exhausted", r.count(CheckStatus::budget_exhausted)}}}};
}

Report report_from_json(const nlohmann::json &j) {
  Report r;
  for (const auto &c : j.at("checks")) {
    CheckRecord rec;
    rec.name = c.at("name").get<std::string>();
    rec.anchor = c.at("paper_anchor").get<std::string>();
    rec.status = status_from_name(c.at("status").get<std::string>());
    rec.witness = c.at("witness").is_null() ? "" : c.at("witness").get<std::string>();
    rec.wall_time_ms = c.at("wall_time_ms").get<double>();
    r.checks.push_back(std::move(rec));
  }
  return r;
}

std::string to_text(const Report &r) {
  std::ostringstream out;
  for (const auto &c : r.checks) {
    std::string tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "BUDGET";
    out << tag << "  " << c.name << "  (" << static_cast<long>(c.wall_time_ms) << " ms)\n";
    if (!c.witness.empty()) out << "      " << c.witness << "\n";
  }
  out << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::fail) << " failed, "
      << r.count(CheckStatus::budget_exhausted) << " budget exhausted, " << r.checks.size() << " total\n";
  return out.str();
}

} // namespace recalc
