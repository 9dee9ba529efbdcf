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

// Implementations behind the `pursuit` command-line subcommands.

#ifndef PURSUIT_COMMANDS_HPP_
#define PURSUIT_COMMANDS_HPP_

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/engine.hpp"
#include "pursuit/scenario_io.hpp"

namespace pursuit::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseFailure = 2,
  kRobotTrapped = 3,
  kIoFailure = 4,
  kNodeBudget = 5,
};

// Maps an exception thrown by the commands below to its exit status.
int exit_code_for(const std::exception_ptr& error);

struct RunOptions {
  std::optional<std::uint64_t> seed;
  bool disable_spatial_hash = false;
};

ScenarioFile apply_options(ScenarioFile file, const RunOptions& options);

struct RunArtifacts {
  GameRecord record;
  std::string trajectory_csv;
  std::string metadata_json;
  std::string svg;
};

// simulate(), or simulate_until_capture() up to T for capture-time payoffs.
RunArtifacts run(const ScenarioFile& file);

// Writes trajectory.csv, metadata.json and plot.svg into `dir`.
void write_run_artifacts(const std::filesystem::path& dir,
                         const RunArtifacts& artifacts);

struct ValueRow {
  int partition_level = 0;
  double upper = 0.0;
  double lower = 0.0;
  double gap = 0.0;
};

std::vector<ValueRow> value_table(const ScenarioFile& file, int n_max,
                                  std::size_t node_budget);
std::string value_table_csv(const std::vector<ValueRow>& rows);
bool gap_nonincreasing(const std::vector<ValueRow>& rows, double tol = 1e-9);

struct BatchRow {
  std::string name;
  int exit_code = kOk;
  std::string error;
  double final_payoff = 0.0;
  std::optional<double> capture_time;
  double wall_seconds = 0.0;
};

// Scenario paths listed in a manifest: one per line, relative to the
// manifest's directory; blank lines and '#' comments are skipped.
std::vector<std::filesystem::path> read_manifest(
    const std::filesystem::path& manifest);

// Runs every listed scenario with up to `parallelism` worker threads and
// writes each run's artifacts to out_dir/<scenario name>/. Rows follow
// manifest order whatever the parallelism.
std::vector<BatchRow> run_batch(const std::filesystem::path& manifest,
                                const std::filesystem::path& out_dir,
                                int parallelism, const RunOptions& options);

std::string batch_summary_csv(const std::vector<BatchRow>& rows,
                              bool include_wall_time = true);

}  // namespace pursuit::cli

#endif  // PURSUIT_COMMANDS_HPP_
