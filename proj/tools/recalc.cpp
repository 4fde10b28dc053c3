#include "recalc/suite.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace recalc;

namespace {

int emit(const std::string &format, const std::string &key, const std::string &value) {
  if (format == "json") std::cout << nlohmann::json{{key, value}}.dump(2) << "\n";
  else std::cout << value << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Checks reflection-equation algebras and braided differential operators"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("--output", output, "text or json (overrides the config)")->check(CLI::IsMember({"text", "json"}));

  std::string config_path;
  auto *verify = app.add_subcommand("verify", "run the configured check suites");
  verify->add_option("--config", config_path, "suite configuration file")->required();

  std::string spec, poly, op, fn, eta_text = "eta";
  auto *normalize = app.add_subcommand("normalize", "normal form of a polynomial");
  normalize->add_option("--presentation", spec, "presentation spec, e.g. rea:dj:2")->required();
  normalize->add_option("--poly", poly, "polynomial")->required();
  normalize->add_option("--eta", eta_text, "value of eta");
  auto *act_cmd = app.add_subcommand("act", "action of an operator polynomial on a function polynomial");
  act_cmd->add_option("--presentation", spec, "presentation spec, e.g. bd_qplane:dj:2")->required();
  act_cmd->add_option("--op", op, "operator polynomial")->required();
  act_cmd->add_option("--fn", fn, "function polynomial")->required();
  act_cmd->add_option("--eta", eta_text, "value of eta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot open config file " + config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      SuiteConfig cfg = parse_config(buf.str());
      if (!output.empty()) cfg.output = output;
      Report r = run_suite(cfg);
      if (cfg.output == "json") std::cout << to_json(r).dump(2) << "\n";
      else std::cout << to_text(r);
      return r.all_pass() ? 0 : 1;
    }
    Coeff eta = parse_coeff(eta_text);
    LoadedPresentation P = load_presentation(spec, eta);
    if (*normalize) return emit(output, "normal_form", normalize_text(P, poly));
    return emit(output, "result", act_text(P, op, fn));
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
