// paraverify: run, list and export verification scenarios.
//
// Exit codes: 0 every check passes, 1 some check fails, 2 configuration or
// scenario error (including checks that could not be evaluated).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "paraverify/builtins.hpp"
#include "paraverify/report_io.hpp"

using namespace paraverify;

namespace {

int run(const std::string& target, std::optional<int> samples, std::optional<double> tol,
        std::optional<std::uint64_t> seed, const std::string& format) {
  const Scenario s = resolve_scenario(target);
  VerifyConfig cfg = s.sampling;
  if (samples) cfg.samples = *samples;
  if (tol) cfg.tol = *tol;
  if (seed) cfg.seed = *seed;
  cfg.validate();
  const VerificationReport rep = run_scenario(s, cfg);
  if (format == "json") std::cout << report_to_json(rep, cfg).dump(2) << "\n";
  else std::cout << report_to_text(rep);
  if (rep.errors() > 0) return 2;
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paraverify: numerical verification of paracontact and warped-product geometry"};
  app.require_subcommand(1);

  std::string target, format = "text", out_path;
  std::optional<int> samples;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;

  auto* run_cmd = app.add_subcommand("run", "run a builtin scenario or a scenario file");
  run_cmd->add_option("scenario", target, "builtin name or path to a JSON scenario")->required();
  run_cmd->add_option("--samples", samples, "sample points (default 100)");
  run_cmd->add_option("--tol", tol, "tolerance (default 1e-8)");
  run_cmd->add_option("--seed", seed, "PRNG seed (default 42)");
  run_cmd->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));

  auto* list_cmd = app.add_subcommand("list", "list builtin scenarios");

  auto* export_cmd = app.add_subcommand("export", "write a builtin scenario as JSON");
  export_cmd->add_option("scenario", target, "builtin name")->required();
  export_cmd->add_option("-o,--output", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) return run(target, samples, tol, seed, format);
    if (*list_cmd) {
      for (const auto& b : builtin_scenarios()) std::cout << b.name << "\t" << b.summary << "\n";
      return 0;
    }
    if (*export_cmd) {
      const Scenario s = builtin_scenario(target);
      std::ofstream out(out_path);
      if (!out) throw Error(ErrorKind::config, "cannot write '" + out_path + "'");
      out << s.document.dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "paraverify: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
