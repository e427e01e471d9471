// dpglct: curve classes, log canonical thresholds and verification suites
// for del Pezzo surfaces.

#include "delpezzo/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
  using namespace delpezzo;

  CLI::App app{"Exact lattice and log canonical threshold toolkit for del Pezzo surfaces"};
  app.require_subcommand(1);

  int degree = 0;
  std::string basis = "blowup";
  std::int64_t deg = 0, self = 0;
  bool json = false;
  auto* classes = app.add_subcommand("classes", "List curve classes of given degree and self-intersection");
  classes->add_option("--degree", degree, "Surface degree K^2 (1..9)")->required();
  classes->add_option("--deg", deg, "Anticanonical degree -K.C")->required();
  classes->add_option("--self", self, "Self-intersection C^2")->required();
  classes->add_option("--basis", basis, "blowup or quadric (degree 8 only)");
  classes->add_flag("--json", json, "JSON output");

  std::string config;
  std::optional<std::string> point, lambda;
  auto* lct = app.add_subcommand("lct", "Log canonical threshold of a configuration file");
  lct->add_option("config", config, "Configuration file (JSON)")->required();
  lct->add_option("--point", point, "Restrict to one marked point");
  lct->add_option("--lambda", lambda, "Check log canonicity of (S, lambda D) instead");
  lct->add_flag("--json", json, "JSON output");

  std::string suite;
  std::uint64_t seed = 42;
  std::size_t cases = 1000;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "table1, lines, lemmaG, lemmaH, corollary, sections, bounds, properties or all")
      ->required();
  verify->add_option("--seed", seed, "Seed for the property suites");
  verify->add_option("--cases", cases, "Instances per property")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "JSON output");

  std::string scenario;
  auto* witness_cmd = app.add_subcommand("witness", "Print the witness configuration of a scenario");
  witness_cmd->add_option("scenario", scenario, "Scenario name, e.g. deg4 or deg2_tacnodal")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  CommandResult result;
  if (*classes) result = cmd_classes(degree, basis, deg, self, json);
  else if (*lct) result = cmd_lct(config, point, lambda, json);
  else if (*verify) result = cmd_verify(suite, seed, cases, json);
  else result = cmd_witness(scenario);

  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
