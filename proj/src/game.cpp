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

#include "pursuit/game.hpp"

#include <algorithm>
#include <cmath>

namespace pursuit {

PayoffKind PayoffKind::capture_time(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidParameter("capture radius alpha must be positive");
  }
  return PayoffKind(Type::kCaptureTime, alpha);
}

const char* payoff_name(PayoffKind::Type type) {
  switch (type) {
    case PayoffKind::Type::kTerminal:
      return "terminal";
    case PayoffKind::Type::kMinOverTime:
      return "min_over_time";
    case PayoffKind::Type::kCaptureTime:
      return "capture_time";
  }
  return "unknown";
}

double payoff_between(const PayoffKind& kind, std::span<const double> times,
                      std::span<const Point2d> pursuer_path,
                      std::span<const Point2d> evader_path) {
  if (pursuer_path.empty() || pursuer_path.size() != evader_path.size() ||
      times.size() != pursuer_path.size()) {
    throw InvalidInput(
        "payoff_between: trajectories must share the same nonempty partition");
  }
  const std::size_t n = pursuer_path.size();
  switch (kind.type()) {
    case PayoffKind::Type::kTerminal:
      return distance(pursuer_path[n - 1], evader_path[n - 1]);
    case PayoffKind::Type::kMinOverTime: {
      double best = distance(pursuer_path[0], evader_path[0]);
      for (std::size_t k = 0; k + 1 < n; ++k) {
        best = std::min(best, min_distance_between_moving_points(
                                  pursuer_path[k], pursuer_path[k + 1],
                                  evader_path[k], evader_path[k + 1]));
      }
      return best;
    }
    case PayoffKind::Type::kCaptureTime: {
      if (distance(pursuer_path[0], evader_path[0]) <= kind.alpha()) {
        return times[0];
      }
      for (std::size_t k = 0; k + 1 < n; ++k) {
        const auto s =
            first_time_within(pursuer_path[k], pursuer_path[k + 1],
                              evader_path[k], evader_path[k + 1], kind.alpha());
        if (s) return times[k] + *s * (times[k + 1] - times[k]);
      }
      return kInfinity;
    }
  }
  return kInfinity;
}

namespace {

double surrogate(const PayoffKind& kind, const Point2d& x1, const Point2d& p,
                 const Point2d& x2, const Point2d& e) {
  if (kind.type() == PayoffKind::Type::kCaptureTime) {
    return min_distance_between_moving_points(x1, p, x2, e);
  }
  return distance(p, e);
}

std::vector<Candidate> candidates_or_stay(const Point2d& at,
                                          const ReachableBoundary& boundary,
                                          std::span<const Capsuled> obstacles,
                                          const SpatialHashGridd* grid,
                                          Robot robot) {
  auto cands = feasible_candidates(boundary, obstacles, grid);
  if (!cands.empty()) return cands;
  if (point_blocked(at, obstacles, grid)) throw RobotTrapped(robot);
  return {{kStayPut, at}};
}

}  // namespace

StepDecision step_minimax(const Point2d& pursuer, const Point2d& evader,
                          const AttainabilitySpec& pursuer_spec,
                          const AttainabilitySpec& evader_spec, double dt,
                          std::span<const Capsuled> obstacles,
                          double delta_alpha, const PayoffKind& kind,
                          const SpatialHashGridd* grid) {
  const auto p_boundary =
      subdivide_boundary(pursuer, pursuer_spec, dt, delta_alpha);
  const auto e_boundary =
      subdivide_boundary(evader, evader_spec, dt, delta_alpha);
  const auto p_cands = candidates_or_stay(pursuer, p_boundary, obstacles, grid,
                                          Robot::kPursuer);
  const auto e_cands = candidates_or_stay(evader, e_boundary, obstacles, grid,
                                          Robot::kEvader);

  StepDecision decision;
  decision.value = kInfinity;
  decision.pursuer_pruned =
      p_boundary.samples.size() -
      (p_cands.front().branch == kStayPut ? 0 : p_cands.size());
  decision.evader_pruned =
      e_boundary.samples.size() -
      (e_cands.front().branch == kStayPut ? 0 : e_cands.size());

  for (const Candidate& p : p_cands) {
    // Evader's best reply; strict comparisons keep the lowest index.
    const Candidate* reply = &e_cands.front();
    double reply_value = surrogate(kind, pursuer, p.point, evader, reply->point);
    for (const Candidate& e : e_cands) {
      const double v = surrogate(kind, pursuer, p.point, evader, e.point);
      if (v > reply_value) {
        reply_value = v;
        reply = &e;
      }
    }
    if (reply_value < decision.value) {
      decision.value = reply_value;
      decision.pursuer_branch = p.branch;
      decision.pursuer_target = p.point;
      decision.evader_branch = reply->branch;
      decision.evader_target = reply->point;
    }
  }
  return decision;
}

GameValueReport value_report(const GameSetup& setup) {
  return {upper_value(setup), lower_value(setup), setup.partition_level,
          branch_count(setup.delta_alpha)};
}

double upper_value(const GameSetup& setup) {
  return solve_game(setup, GameOrder::kUpper).value;
}

double lower_value(const GameSetup& setup) {
  return solve_game(setup, GameOrder::kLower).value;
}

double truncated_upper_value(const GameSetup& setup) {
  return solve_game(setup, GameOrder::kTruncatedUpper).value;
}

double t_star(const Point2d& pursuer, const Point2d& evader,
              const AttainabilitySpec& pursuer_spec,
              const AttainabilitySpec& evader_spec) {
  const double d = distance(pursuer, evader);
  if (d == 0.0) return 0.0;
  const double closing = pursuer_spec.max_speed() - evader_spec.max_speed();
  if (closing <= 0.0) return kInfinity;
  return d / closing;
}

}  // namespace pursuit
