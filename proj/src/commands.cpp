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

#include "pursuit/commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "pursuit/artifacts.hpp"
#include "pursuit/game.hpp"

namespace pursuit::cli {

int exit_code_for(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const ParseError&) {
    return kParseFailure;
  } catch (const ScenarioError&) {
    return kParseFailure;
  } catch (const RobotTrapped&) {
    return kRobotTrapped;
  } catch (const IoError&) {
    return kIoFailure;
  } catch (const std::filesystem::filesystem_error&) {
    return kIoFailure;
  } catch (const ResourceLimit&) {
    return kNodeBudget;
  } catch (...) {
    return kFailure;
  }
}

ScenarioFile apply_options(ScenarioFile file, const RunOptions& options) {
  if (options.seed) apply_seed(file.scenario, *options.seed);
  if (options.disable_spatial_hash) file.scenario.use_spatial_hash = false;
  return file;
}

RunArtifacts run(const ScenarioFile& file) {
  const Scenario& s = file.scenario;
  RunArtifacts out;
  out.record = s.payoff.type() == PayoffKind::Type::kCaptureTime
                   ? simulate_until_capture(s, s.horizon)
                   : simulate(s);
  out.trajectory_csv = trajectory_csv(out.record);
  out.metadata_json = metadata_json(s, out.record);
  out.svg = render_svg(s, out.record, file.style);
  return out;
}

void write_run_artifacts(const std::filesystem::path& dir,
                         const RunArtifacts& artifacts) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_text_file(dir / "trajectory.csv", artifacts.trajectory_csv);
  write_text_file(dir / "metadata.json", artifacts.metadata_json);
  write_text_file(dir / "plot.svg", artifacts.svg);
}

std::vector<ValueRow> value_table(const ScenarioFile& file, int n_max,
                                  std::size_t node_budget) {
  if (n_max < 0) throw InvalidParameter("n_max must be >= 0");
  const Scenario& s = file.scenario;
  std::vector<ValueRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    const GameSetup setup{s.pursuer_start,
                          s.evader_start,
                          AttainabilitySpec(s.pursuer_speed),
                          AttainabilitySpec(s.evader_speed),
                          s.obstacles,
                          s.horizon,
                          n,
                          s.delta_alpha,
                          s.payoff,
                          node_budget};
    const GameValueReport report = value_report(setup);
    rows.push_back({n, report.upper_value, report.lower_value,
                    report.upper_value - report.lower_value});
  }
  return rows;
}

std::string value_table_csv(const std::vector<ValueRow>& rows) {
  std::string out = "n,upper_value,lower_value,gap\n";
  for (const ValueRow& r : rows) {
    out += std::to_string(r.partition_level) + "," +
           format_general(r.upper, 12) + "," + format_general(r.lower, 12) +
           "," + format_general(r.gap, 12) + "\n";
  }
  return out;
}

bool gap_nonincreasing(const std::vector<ValueRow>& rows, double tol) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    // inf - inf gaps (no capture in either game) count as equal.
    if (std::isnan(rows[i].gap) && std::isnan(rows[i - 1].gap)) continue;
    if (!(rows[i].gap <= rows[i - 1].gap + tol)) return false;
  }
  return true;
}

std::vector<std::filesystem::path> read_manifest(
    const std::filesystem::path& manifest) {
  std::istringstream in(read_text_file(manifest));
  std::vector<std::filesystem::path> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::filesystem::path entry = line.substr(first, last - first + 1);
    out.push_back(entry.is_absolute() ? entry
                                      : manifest.parent_path() / entry);
  }
  return out;
}

std::vector<BatchRow> run_batch(const std::filesystem::path& manifest,
                                const std::filesystem::path& out_dir,
                                int parallelism, const RunOptions& options) {
  const auto entries = read_manifest(manifest);
  std::vector<BatchRow> rows(entries.size());

  const auto run_one = [&](std::size_t i) {
    BatchRow& row = rows[i];
    row.name = entries[i].stem().string();
    const auto start = std::chrono::steady_clock::now();
    try {
      const ScenarioFile file =
          apply_options(load_scenario_file(entries[i]), options);
      row.name = file.scenario.name;
      const RunArtifacts artifacts = run(file);
      write_run_artifacts(out_dir / row.name, artifacts);
      row.final_payoff = artifacts.record.final_payoff;
      row.capture_time = artifacts.record.capture_time;
    } catch (const std::exception& e) {
      row.exit_code = exit_code_for(std::current_exception());
      row.error = e.what();
    }
    row.wall_seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  };

  const std::size_t workers = std::min<std::size_t>(
      entries.size(), static_cast<std::size_t>(std::max(1, parallelism)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) run_one(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < entries.size(); i = next++) run_one(i);
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

std::string batch_summary_csv(const std::vector<BatchRow>& rows,
                              bool include_wall_time) {
  std::string out = "name,status,final_payoff,capture_time";
  out += include_wall_time ? ",wall_time_s\n" : "\n";
  for (const BatchRow& r : rows) {
    out += r.name + ",";
    out += r.exit_code == kOk ? "ok" : "failed(" + std::to_string(r.exit_code) + ")";
    out += ",";
    if (r.exit_code == kOk) out += format_general(r.final_payoff, 9);
    out += ",";
    if (r.capture_time) out += format_general(*r.capture_time, 9);
    if (include_wall_time) out += "," + format_general(r.wall_seconds, 6);
    out += "\n";
  }
  return out;
}

}  // namespace pursuit::cli
