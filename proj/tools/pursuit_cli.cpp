// Copyright 2026 The Pursuit Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pursuit: command-line front end for the pursuit-evasion engine.
//
//   pursuit run SCENARIO --out DIR [--seed N] [--no-spatial-hash]
//   pursuit value-table SCENARIO [--n-max N] [--out FILE]
//   pursuit batch MANIFEST --out DIR [--parallel K]
//   pursuit dump-scenario SCENARIO [--out FILE]

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pursuit/artifacts.hpp"
#include "pursuit/commands.hpp"

namespace {

using namespace pursuit;

std::size_t node_budget_from_env() {
  const char* env = std::getenv("PURSUIT_NODE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultNodeBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring invalid PURSUIT_NODE_BUDGET='" << env
            << "'\n";
  return kDefaultNodeBudget;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

int report(const std::exception& e) {
  const int code = cli::exit_code_for(std::current_exception());
  std::cerr << "error: " << e.what() << "\n";
  if (code == cli::kNodeBudget) {
    std::cerr << "hint: lower --n-max, increase delta_alpha, or raise "
                 "PURSUIT_NODE_BUDGET\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pursuit-evasion games among moving circular obstacles"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out;
  std::uint64_t seed = 0;
  bool no_hash = false;
  int n_max = 2;
  int parallel = 1;

  auto* run_cmd = app.add_subcommand("run", "Simulate one scenario");
  run_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
  run_cmd->add_option("--out", out, "Output directory")->required();
  auto* run_seed = run_cmd->add_option("--seed", seed, "Override the scenario seed");
  run_cmd->add_flag("--no-spatial-hash", no_hash, "Disable the spatial hash");

  auto* table_cmd = app.add_subcommand(
      "value-table", "Exact upper/lower game values over binary partitions");
  table_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
  table_cmd->add_option("--n-max", n_max, "Largest partition level")
      ->check(CLI::Range(0, 20));
  table_cmd->add_option("--out", out, "Output CSV (stdout when omitted)");

  std::string manifest;
  auto* batch_cmd = app.add_subcommand("batch", "Run every scenario of a manifest");
  batch_cmd->add_option("manifest", manifest, "Manifest file")->required();
  batch_cmd->add_option("--out", out, "Output directory")->required();
  batch_cmd->add_option("--parallel", parallel, "Worker threads")
      ->check(CLI::PositiveNumber);
  auto* batch_seed = batch_cmd->add_option("--seed", seed, "Override every scenario seed");
  batch_cmd->add_flag("--no-spatial-hash", no_hash, "Disable the spatial hash");

  auto* dump_cmd = app.add_subcommand(
      "dump-scenario", "Print a scenario in canonical form");
  dump_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
  dump_cmd->add_option("--out", out, "Output file (stdout when omitted)");
  auto* dump_seed = dump_cmd->add_option("--seed", seed, "Override the scenario seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kParseFailure;
  }

  try {
    if (*run_cmd) {
      cli::RunOptions options;
      if (*run_seed) options.seed = seed;
      options.disable_spatial_hash = no_hash;
      const auto file = cli::apply_options(load_scenario_file(scenario_path), options);
      const auto artifacts = cli::run(file);
      cli::write_run_artifacts(out, artifacts);
      std::cout << file.scenario.name << ": " << artifacts.record.steps()
                << " steps, final payoff "
                << format_general(artifacts.record.final_payoff, 9);
      if (artifacts.record.capture_time) {
        std::cout << ", capture at t=" << format_general(*artifacts.record.capture_time, 9);
      }
      std::cout << "\n";
      return cli::kOk;
    }
    if (*table_cmd) {
      const auto file = load_scenario_file(scenario_path, ScenarioUse::kValueTable);
      const auto rows = cli::value_table(file, n_max, node_budget_from_env());
      emit(cli::value_table_csv(rows), out);
      const bool ok = cli::gap_nonincreasing(rows);
      std::cerr << "gap nonincreasing in n: " << (ok ? "yes" : "NO") << "\n";
      return ok ? cli::kOk : cli::kFailure;
    }
    if (*batch_cmd) {
      cli::RunOptions options;
      if (*batch_seed) options.seed = seed;
      options.disable_spatial_hash = no_hash;
      const auto rows = cli::run_batch(manifest, out, parallel, options);
      const std::string summary = cli::batch_summary_csv(rows);
      std::filesystem::create_directories(out);
      write_text_file(std::filesystem::path(out) / "summary.csv", summary);
      std::cout << summary;
      int status = cli::kOk;
      for (const auto& row : rows) {
        if (row.exit_code != cli::kOk) {
          std::cerr << row.name << ": " << row.error << "\n";
          status = cli::kFailure;
        }
      }
      return status;
    }
    if (*dump_cmd) {
      cli::RunOptions options;
      if (*dump_seed) options.seed = seed;
      const auto file = cli::apply_options(load_scenario_file(scenario_path), options);
      emit(dump_scenario(file), out);
      return cli::kOk;
    }
  } catch (const std::exception& e) {
    return report(e);
  }
  return cli::kOk;
}
