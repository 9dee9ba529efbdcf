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

// Scenario files: a flat YAML mapping with a nested obstacle list.
//
//   name: fig_b
//   pursuer_start: [0, 0]
//   evader_start: [12, 9]
//   pursuer_speed: 10
//   evader_speed: 8
//   T: 10
//   dt: 0.2
//   delta_alpha: 0.2
//   payoff: terminal          # terminal | min_over_time | capture_time
//   alpha: 0.1                # capture_time only
//   seed: 7
//   use_spatial_hash: true
//   obstacles:
//     - {radius: 1, motion: static, center: [5, 5]}
//     - {radius: 1, motion: linear, start: [0, 8], velocity: [1, 0]}
//     - {radius: 1, motion: random_waypoint, bounds: [0, 0, 20, 20],
//        speed: 2}
//   output: {width: 800, height: 800}

#ifndef PURSUIT_SCENARIO_IO_HPP_
#define PURSUIT_SCENARIO_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "pursuit/engine.hpp"

namespace pursuit {

struct PlotStyle {
  int width = 800;
  int height = 800;
  std::string background = "#ffffff";
  std::string pursuer_color = "#d62728";
  std::string evader_color = "#1f77b4";
  std::string obstacle_color = "#7f7f7f";

  friend bool operator==(const PlotStyle&, const PlotStyle&) = default;
};

struct ScenarioFile {
  Scenario scenario;
  PlotStyle style;

  friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

// Malformed or invalid scenario text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `default_name` is used when the document has no `name` key.
ScenarioFile parse_scenario(const std::string& text,
                            const std::string& default_name = "scenario",
                            ScenarioUse use = ScenarioUse::kSimulation);

ScenarioFile load_scenario_file(const std::filesystem::path& path,
                                ScenarioUse use = ScenarioUse::kSimulation);

// Canonical text form; parse_scenario(dump_scenario(f)) == f.
std::string dump_scenario(const ScenarioFile& file);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace pursuit

#endif  // PURSUIT_SCENARIO_IO_HPP_
