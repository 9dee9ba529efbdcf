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

#include "pursuit/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pursuit {

namespace {

bool blocked_at_start(const ObstacleField& field, const Point2d& p) {
  return std::any_of(field.tracks.begin(), field.tracks.end(),
                     [&](const ObstacleTrack& track) {
                       return distance(p, obstacle_center(track, 0.0)) <=
                              track.radius();
                     });
}

GameRecord run_steps(const Scenario& scenario, int steps, bool stop_on_capture) {
  const AttainabilitySpec pursuer_spec(scenario.pursuer_speed);
  const AttainabilitySpec evader_spec(scenario.evader_speed);
  const double dt = scenario.time_step;
  const double cell_size = scenario.hash_cell_size > 0.0
                               ? scenario.hash_cell_size
                               : default_cell_size(scenario);
  const bool capture = scenario.payoff.type() == PayoffKind::Type::kCaptureTime;

  GameRecord record;
  record.times.push_back(0.0);
  record.pursuer_path.push_back(scenario.pursuer_start);
  record.evader_path.push_back(scenario.evader_start);

  const bool already_captured =
      capture && distance(scenario.pursuer_start, scenario.evader_start) <=
                     scenario.payoff.alpha();
  if (!(stop_on_capture && already_captured)) {
    for (int k = 0; k < steps; ++k) {
      const double t0 = k * dt;
      const double t1 = (k + 1) * dt;
      const auto capsules = sweep_capsules(scenario.obstacles, t0, t1);
      std::optional<SpatialHashGridd> grid;
      if (scenario.use_spatial_hash && !capsules.empty()) {
        grid = grid_build<double>(capsules, cell_size);
      }
      const Point2d x1 = record.pursuer_path.back();
      const Point2d x2 = record.evader_path.back();
      StepDecision decision;
      try {
        decision = step_minimax(x1, x2, pursuer_spec, evader_spec, dt,
                                capsules, scenario.delta_alpha,
                                scenario.payoff, grid ? &*grid : nullptr);
      } catch (const RobotTrapped& trapped) {
        throw RobotTrapped(trapped.robot(), k);
      }
      record.times.push_back(t1);
      record.pursuer_path.push_back(decision.pursuer_target);
      record.evader_path.push_back(decision.evader_target);
      record.step_values.push_back(decision.value);
      record.pursuer_branches.push_back(decision.pursuer_branch);
      record.evader_branches.push_back(decision.evader_branch);
      record.pruned_branch_counts.emplace_back(decision.pursuer_pruned,
                                               decision.evader_pruned);
      if (stop_on_capture &&
          first_time_within(x1, decision.pursuer_target, x2,
                            decision.evader_target, scenario.payoff.alpha())) {
        break;
      }
    }
  }

  record.final_payoff = payoff_between(scenario.payoff, record.times,
                                       record.pursuer_path,
                                       record.evader_path);
  if (capture && std::isfinite(record.final_payoff)) {
    record.capture_time = record.final_payoff;
  }
  return record;
}

}  // namespace

void validate(const Scenario& s, ScenarioUse use) {
  const bool values_only = use == ScenarioUse::kValueTable;
  std::vector<std::string> problems;
  if (!s.pursuer_start.allFinite()) problems.push_back("pursuer_start: not finite");
  if (!s.evader_start.allFinite()) problems.push_back("evader_start: not finite");
  if (!(s.pursuer_speed > 0.0) || !std::isfinite(s.pursuer_speed)) {
    problems.push_back("pursuer_speed: must be positive");
  }
  if (!(s.evader_speed > 0.0) || !std::isfinite(s.evader_speed)) {
    problems.push_back("evader_speed: must be positive");
  }
  const bool horizon_ok = std::isfinite(s.horizon) &&
                          (s.horizon > 0.0 || (values_only && s.horizon == 0.0));
  if (!horizon_ok) problems.push_back("T: must be positive");
  if (values_only) {
    // The partition comes from the refinement level.
  } else if (!(s.time_step > 0.0) || !std::isfinite(s.time_step)) {
    problems.push_back("dt: must be positive");
  } else if (horizon_ok) {
    if (s.time_step > s.horizon) {
      problems.push_back("dt: must not exceed T");
    } else {
      const double ratio = s.horizon / s.time_step;
      if (std::abs(ratio - std::round(ratio)) > 1e-6) {
        problems.push_back("dt: T/dt must be an integer");
      }
    }
  }
  if (!(s.delta_alpha > 0.0) || !(s.delta_alpha <= 2.0 * std::numbers::pi)) {
    problems.push_back("delta_alpha: must lie in (0, 2*pi]");
  }
  if (s.pursuer_start.allFinite() &&
      blocked_at_start(s.obstacles, s.pursuer_start)) {
    problems.push_back("pursuer_start: inside an obstacle at t=0");
  }
  if (s.evader_start.allFinite() &&
      blocked_at_start(s.obstacles, s.evader_start)) {
    problems.push_back("evader_start: inside an obstacle at t=0");
  }
  if (!problems.empty()) throw ScenarioError(std::move(problems));
}

int step_count(const Scenario& scenario) {
  return static_cast<int>(std::lround(scenario.horizon / scenario.time_step));
}

double default_cell_size(const Scenario& scenario) {
  const double displacement =
      std::max(scenario.pursuer_speed, scenario.evader_speed) *
      scenario.time_step;
  const double size =
      2.0 * (max_obstacle_radius(scenario.obstacles) + displacement);
  return size > 0.0 ? size : 1.0;
}

void apply_seed(Scenario& scenario, std::uint64_t seed) {
  scenario.seed = seed;
  std::vector<ObstacleTrack> tracks;
  tracks.reserve(scenario.obstacles.tracks.size());
  for (std::size_t i = 0; i < scenario.obstacles.tracks.size(); ++i) {
    const ObstacleTrack& track = scenario.obstacles.tracks[i];
    if (const auto* w = std::get_if<RandomWaypointMotion>(&track.motion())) {
      RandomWaypointMotion reseeded = *w;
      reseeded.seed = derive_obstacle_seed(seed, i);
      tracks.emplace_back(track.radius(), reseeded);
    } else {
      tracks.push_back(track);
    }
  }
  scenario.obstacles.tracks = std::move(tracks);
}

GameRecord simulate(const Scenario& scenario) {
  validate(scenario);
  return run_steps(scenario, step_count(scenario), false);
}

GameRecord simulate_until_capture(const Scenario& scenario,
                                  double max_horizon) {
  validate(scenario);
  if (scenario.payoff.type() != PayoffKind::Type::kCaptureTime) {
    throw InvalidParameter(
        "simulate_until_capture requires a capture_time payoff");
  }
  if (!(max_horizon >= scenario.time_step) || !std::isfinite(max_horizon)) {
    throw InvalidParameter("simulate_until_capture: max_T must be >= dt");
  }
  const int steps = static_cast<int>(
      std::floor(max_horizon / scenario.time_step + 1e-9));
  return run_steps(scenario, steps, true);
}

std::size_t count_capsule_violations(const Scenario& scenario,
                                     const GameRecord& record) {
  std::size_t violations = 0;
  for (std::size_t k = 0; k + 1 < record.times.size(); ++k) {
    const auto capsules = sweep_capsules(scenario.obstacles, record.times[k],
                                         record.times[k + 1]);
    for (const Point2d& p :
         {record.pursuer_path[k + 1], record.evader_path[k + 1]}) {
      if (point_blocked<double>(p, capsules, nullptr)) ++violations;
    }
  }
  return violations;
}

}  // namespace pursuit
