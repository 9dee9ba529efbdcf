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

// Payoff functionals, the receding-horizon minimax step, exact values of
// the discretized upper / lower / truncated games, and the guaranteed
// capture time T*.

#ifndef PURSUIT_GAME_HPP_
#define PURSUIT_GAME_HPP_

#include <cstddef>
#include <limits>
#include <span>

#include "pursuit/dynamics.hpp"
#include "pursuit/geometry.hpp"
#include "pursuit/obstacles.hpp"

namespace pursuit {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

class PayoffKind {
 public:
  enum class Type { kTerminal, kMinOverTime, kCaptureTime };

  // Distance between the robots at the final instant.
  static PayoffKind terminal() { return PayoffKind(Type::kTerminal, 0.0); }
  // Smallest distance along the whole realized trajectory.
  static PayoffKind min_over_time() {
    return PayoffKind(Type::kMinOverTime, 0.0);
  }
  // First instant at which the robots are within alpha; +inf if never.
  static PayoffKind capture_time(double alpha);

  Type type() const { return type_; }
  double alpha() const { return alpha_; }

  friend bool operator==(const PayoffKind&, const PayoffKind&) = default;

 private:
  PayoffKind(Type type, double alpha) : type_(type), alpha_(alpha) {}

  Type type_;
  double alpha_;
};

const char* payoff_name(PayoffKind::Type type);

// Evaluates `kind` on trajectories sampled at the partition instants
// `times`; motion between instants is linear. Throws InvalidInput when the
// three sequences differ in length or are empty.
double payoff_between(const PayoffKind& kind, std::span<const double> times,
                      std::span<const Point2d> pursuer_path,
                      std::span<const Point2d> evader_path);

// Branch index reported when a robot's whole boundary is blocked and it
// stays where it is.
inline constexpr std::size_t kStayPut = std::numeric_limits<std::size_t>::max();

struct StepDecision {
  std::size_t pursuer_branch = 0;
  std::size_t evader_branch = 0;
  Point2d pursuer_target;
  Point2d evader_target;
  double value = 0.0;
  std::size_t pursuer_pruned = 0;
  std::size_t evader_pruned = 0;

  friend bool operator==(const StepDecision&, const StepDecision&) = default;
};

// One step of the receding-horizon minimax: for every feasible pursuer
// branch the evader picks its best reply, and the pursuer keeps the branch
// whose best reply is smallest. Candidates are scored by the distance
// between endpoints, or by the closest approach during the step for
// capture-time payoffs. Ties go to the lowest branch index on both sides.
StepDecision step_minimax(const Point2d& pursuer, const Point2d& evader,
                          const AttainabilitySpec& pursuer_spec,
                          const AttainabilitySpec& evader_spec, double dt,
                          std::span<const Capsuled> obstacles,
                          double delta_alpha, const PayoffKind& kind,
                          const SpatialHashGridd* grid = nullptr);

inline constexpr std::size_t kDefaultNodeBudget = 100'000'000;

struct GameSetup {
  Point2d pursuer_start;
  Point2d evader_start;
  AttainabilitySpec pursuer_spec;
  AttainabilitySpec evader_spec;
  ObstacleField obstacles;
  double horizon = 0.0;
  // Binary partition of [0, horizon] into 2^partition_level steps.
  int partition_level = 0;
  double delta_alpha = 0.2;
  PayoffKind payoff = PayoffKind::terminal();
  std::size_t node_budget = kDefaultNodeBudget;
};

enum class GameOrder {
  kUpper,           // pursuer commits each step first, evader replies
  kLower,           // evader commits first, pursuer replies
  kTruncatedUpper,  // upper, but the evader skips its final move
};

struct GameSolution {
  double value = 0.0;
  std::size_t nodes_visited = 0;
};

// Exact value of the finite alternating game. Throws ResourceLimit when the
// search visits more than setup.node_budget nodes.
GameSolution solve_game(const GameSetup& setup, GameOrder order);

double upper_value(const GameSetup& setup);
double lower_value(const GameSetup& setup);
double truncated_upper_value(const GameSetup& setup);

struct GameValueReport {
  double upper_value = 0.0;
  double lower_value = 0.0;
  int partition_level = 0;
  std::size_t branch_factor = 0;
};

GameValueReport value_report(const GameSetup& setup);

// Least t with P_evader(x2, t) inside P_pursuer(x1, t): |x1 - x2| / (s1 - s2)
// for a faster pursuer, 0 for coincident starts, +inf otherwise.
double t_star(const Point2d& pursuer, const Point2d& evader,
              const AttainabilitySpec& pursuer_spec,
              const AttainabilitySpec& evader_spec);

}  // namespace pursuit

#endif  // PURSUIT_GAME_HPP_
