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

// Scenario orchestration: the receding-horizon minimax loop over a uniform
// time partition.

#ifndef PURSUIT_ENGINE_HPP_
#define PURSUIT_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/obstacles.hpp"

namespace pursuit {

struct Scenario {
  std::string name = "scenario";
  Point2d pursuer_start = Point2d::Zero();
  Point2d evader_start = Point2d::Zero();
  double pursuer_speed = 1.0;
  double evader_speed = 1.0;
  double horizon = 1.0;     // T, seconds
  double time_step = 1.0;   // dt, seconds
  double delta_alpha = 0.2;  // radians
  PayoffKind payoff = PayoffKind::terminal();
  ObstacleField obstacles;
  std::uint64_t seed = 0;
  bool use_spatial_hash = true;
  // Grid cell size; nonpositive selects 2 * (max obstacle radius + max
  // per-step robot displacement).
  double hash_cell_size = 0.0;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

enum class ScenarioUse {
  kSimulation,
  // Exact value tables only need T >= 0; dt is not used.
  kValueTable,
};

// Throws ScenarioError naming every violated field.
void validate(const Scenario& scenario,
              ScenarioUse use = ScenarioUse::kSimulation);

// round(T / dt); validate() requires T / dt to be that integer to 1e-6.
int step_count(const Scenario& scenario);

double default_cell_size(const Scenario& scenario);

// Sets the scenario seed and rederives the seeds of its random obstacles.
void apply_seed(Scenario& scenario, std::uint64_t seed);

struct GameRecord {
  std::vector<double> times;
  std::vector<Point2d> pursuer_path;
  std::vector<Point2d> evader_path;
  // Per step:
  std::vector<double> step_values;
  std::vector<std::size_t> pursuer_branches;
  std::vector<std::size_t> evader_branches;
  std::vector<std::pair<std::size_t, std::size_t>> pruned_branch_counts;

  double final_payoff = 0.0;
  std::optional<double> capture_time;

  std::size_t steps() const { return step_values.size(); }

  friend bool operator==(const GameRecord&, const GameRecord&) = default;
};

GameRecord simulate(const Scenario& scenario);

// Runs until the robots come within alpha (capture-time payoff required)
// or until max_horizon elapses; capture_time stays empty in the latter case
// and final_payoff is +inf.
GameRecord simulate_until_capture(const Scenario& scenario, double max_horizon);

// Number of recorded positions (after the initial one) lying inside the
// capsule swept during the step that produced them. Exact, gridless.
std::size_t count_capsule_violations(const Scenario& scenario,
                                     const GameRecord& record);

}  // namespace pursuit

#endif  // PURSUIT_ENGINE_HPP_
