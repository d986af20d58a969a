// Command-line front end. Talks to the core exclusively through the C API.

#include "kfock_c.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int run_command(const std::string& command, const std::string& scenario_path,
                const std::string& out_path, const std::string& format, bool has_seed,
                uint64_t seed) {
  kfock_scenario* scenario = nullptr;
  kfock_status status;
  if (!scenario_path.empty()) {
    status = kfock_scenario_parse_file(scenario_path.c_str(), &scenario);
  } else {
    // calibrate and verify run fine on an empty scenario
    status = kfock_scenario_parse("{}", &scenario);
  }
  if (status != KFOCK_OK) {
    std::cerr << "error: " << kfock_last_error() << "\n";
    return 2;
  }

  kfock_results* results = nullptr;
  status = kfock_scenario_run(scenario, command.c_str(), has_seed ? 1 : 0, seed, &results);
  if (status != KFOCK_OK) {
    std::cerr << "error: " << kfock_last_error() << "\n";
    kfock_scenario_destroy(scenario);
    return 2;
  }

  // timings go to stderr so the payload stays byte-reproducible
  for (size_t i = 0; i < kfock_results_count(results); ++i)
    std::fprintf(stderr, "# %s: %.1f ms\n", kfock_results_request(results, i),
                 1e3 * kfock_results_elapsed_seconds(results, i));

  std::string text;
  if (format == "csv") {
    text = kfock_results_csv(results);
    if (text.empty()) {
      std::cerr << "error: csv output is only produced by field-eval requests\n";
      kfock_results_destroy(results);
      kfock_scenario_destroy(scenario);
      return 2;
    }
  } else {
    text = kfock_results_json(results);
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      kfock_results_destroy(results);
      kfock_scenario_destroy(scenario);
      return 2;
    }
    out << text;
  } else {
    std::cout << text;
  }

  const int exit_code = kfock_results_all_passed(results) ? 0 : 1;
  kfock_results_destroy(results);
  kfock_scenario_destroy(scenario);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kfock: wave-vector-indexed oscillator fields (scalar and photon)"};
  app.set_version_flag("--version", std::string(kfock_version()));
  app.require_subcommand(1);

  std::string scenario_path, out_path, format = "json";
  uint64_t seed = 0;
  bool has_seed = false;

  app.add_option("--scenario", scenario_path, "Scenario JSON file");
  app.add_option("--out", out_path, "Write results here instead of stdout");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "Seed for randomized requests (default 0)")
      ->each([&has_seed](const std::string&) { has_seed = true; });

  struct Command {
    const char* name;
    const char* help;
    bool needs_scenario;
  };
  const Command commands[] = {
      {"field-eval", "Evaluate field expectation values at spacetime points", true},
      {"energy", "Classical and quantum energies of the scenario field", true},
      {"stokes", "Stokes expectations (and photon spin) of a 2-mode field", true},
      {"calibrate", "Report the amplitude-scale calibration lambda*l", false},
      {"verify", "Run the full invariant verification suite", false},
      {"appendix-b", "Check the counter-propagating cross-term cancellation", true},
  };
  for (const Command& command : commands)
    app.add_subcommand(command.name, command.help)->fallthrough();

  CLI11_PARSE(app, argc, argv);

  const std::string chosen = app.get_subcommands().front()->get_name();
  for (const Command& command : commands) {
    if (chosen != command.name) continue;
    if (command.needs_scenario && scenario_path.empty()) {
      std::cerr << "error: " << chosen << " requires --scenario <path>\n";
      return 2;
    }
  }
  return run_command(chosen, scenario_path, out_path, format, has_seed, seed);
}
