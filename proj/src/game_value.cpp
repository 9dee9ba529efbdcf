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

// Exact values of the discretized alternating games by depth-first minimax
// with alpha-beta cutoffs. Without obstacles every boundary branch is always
// available, which gives cheap guaranteed bounds on a subtree's value:
//  - a greedy evader (move most aligned with the current separation)
//    gains at least r2 * cos(gap / 2) per move, whatever the pursuer does;
//  - a greedy pursuer shrinks a separation d to at most
//    max(r1, sqrt(d^2 - 2 d r1 cos(gap / 2) + r1^2)), and an evader move
//    grows it by at most r2.
// Subtrees whose bounds fall outside the search window are cut, which keeps
// fine angular grids tractable. The cuts never change the value.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/game.hpp"

namespace pursuit {

namespace {

struct Node {
  int step = 0;
  // False at a step boundary; true once the step's first mover committed
  // to `pending`.
  bool reply = false;
  Point2d pursuer;
  Point2d evader;
  Point2d pending;
  double running = kInfinity;  // min-over-time accumulator
};

struct Bounds {
  double lower = -kInfinity;
  double upper = kInfinity;
};

class GameSolver {
 public:
  GameSolver(const GameSetup& setup, GameOrder order)
      : setup_(setup),
        order_(order),
        steps_(1 << setup.partition_level),
        dt_(setup.horizon / static_cast<double>(steps_)),
        r1_(reach_set_radius(setup.pursuer_spec, dt_)),
        r2_(reach_set_radius(setup.evader_spec, dt_)),
        directions_(unit_directions(setup.delta_alpha)),
        alignment_(std::cos(0.5 * max_angular_gap(setup.delta_alpha))),
        bounded_(setup.obstacles.tracks.empty()) {
    capsules_.reserve(static_cast<std::size_t>(steps_));
    for (int k = 0; k < steps_; ++k) {
      capsules_.push_back(sweep_capsules(setup.obstacles, k * dt_,
                                         (k + 1) * dt_));
    }
    scratch_.resize(static_cast<std::size_t>(2 * steps_ + 2));
  }

  GameSolution solve() {
    Node root{0, false, setup_.pursuer_start, setup_.evader_start,
              Point2d::Zero(), kInfinity};
    const double v = search(root, -kInfinity, kInfinity);
    return {v, nodes_};
  }

 private:
  struct Move {
    Point2d point;
    double key;
  };

  Robot first_mover() const {
    return order_ == GameOrder::kLower ? Robot::kEvader : Robot::kPursuer;
  }
  Robot second_mover() const {
    return order_ == GameOrder::kLower ? Robot::kPursuer : Robot::kEvader;
  }
  bool evader_skips(int step) const {
    return order_ == GameOrder::kTruncatedUpper && step == steps_ - 1;
  }

  double leaf_value(const Node& n) const {
    switch (setup_.payoff.type()) {
      case PayoffKind::Type::kTerminal:
        return distance(n.pursuer, n.evader);
      case PayoffKind::Type::kMinOverTime:
        return n.running;
      case PayoffKind::Type::kCaptureTime:
        return kInfinity;
    }
    return kInfinity;
  }

  // Outcome forced on a robot with no legal move: the worst payoff for it.
  double trapped_value(Robot robot, int step) const {
    if (robot == Robot::kPursuer) return kInfinity;
    return setup_.payoff.type() == PayoffKind::Type::kCaptureTime
               ? step * dt_
               : 0.0;
  }

  // Remaining moves from node n, pending move already applied.
  void remaining_moves(const Node& n, std::vector<Robot>& out) const {
    out.clear();
    if (n.reply) out.push_back(second_mover());
    for (int k = n.step + (n.reply ? 1 : 0); k < steps_; ++k) {
      out.push_back(first_mover());
      if (!evader_skips(k)) out.push_back(second_mover());
    }
  }

  Bounds bounds(const Node& n) {
    Bounds b;
    if (!bounded_) return b;
    Point2d p = n.pursuer;
    Point2d e = n.evader;
    if (n.reply) (first_mover() == Robot::kPursuer ? p : e) = n.pending;
    remaining_moves(n, moves_);

    double motion = 0.0;
    double gain = 0.0;
    for (Robot r : moves_) {
      motion += r == Robot::kPursuer ? r1_ : r2_;
      gain += r == Robot::kPursuer ? -r1_ : alignment_ * r2_;
    }
    const double start_gap = distance(n.pursuer, n.evader);
    const double slack = 1e-12 * (1.0 + start_gap + motion + r1_ + r2_);

    // Separation once the pending move is applied.
    const double d = distance(p, e);
    double lower_final = std::max(0.0, d + gain);
    if (!moves_.empty() && moves_.back() == Robot::kEvader) {
      lower_final = std::max(lower_final, alignment_ * r2_);
    }
    double upper_final = d;
    for (Robot r : moves_) {
      if (r == Robot::kPursuer) {
        const double sq = upper_final * upper_final -
                          2.0 * alignment_ * r1_ * upper_final + r1_ * r1_;
        upper_final = std::max(r1_, std::sqrt(std::max(0.0, sq)));
      } else {
        upper_final += r2_;
      }
    }

    // Distances along the rest of the play can drop by at most the total
    // motion still available from the start of this step.
    const double pending_motion =
        n.reply ? (first_mover() == Robot::kPursuer ? r1_ : r2_) : 0.0;
    const double lower_anytime =
        std::max(0.0, start_gap - motion - pending_motion);

    switch (setup_.payoff.type()) {
      case PayoffKind::Type::kTerminal:
        b = {lower_final - slack, upper_final + slack};
        break;
      case PayoffKind::Type::kMinOverTime:
        b = {std::min(n.running, lower_anytime) - slack,
             std::min(n.running, upper_final) + slack};
        break;
      case PayoffKind::Type::kCaptureTime: {
        const double closing =
            setup_.pursuer_spec.max_speed() + setup_.evader_spec.max_speed();
        const double earliest =
            n.step * dt_ +
            std::max(0.0, start_gap - setup_.payoff.alpha()) / closing;
        b = {earliest * (1.0 - 1e-12) - slack, kInfinity};
        break;
      }
    }
    return b;
  }

  // Feasible boundary samples of `robot` at `from` for `step`, exact
  // duplicates removed; the stay-put point when every branch is blocked;
  // empty when the robot is trapped.
  std::vector<Move>& moves_for(Robot robot, const Point2d& from, int step,
                               std::size_t depth) {
    auto& out = scratch_[depth];
    out.clear();
    const double radius = robot == Robot::kPursuer ? r1_ : r2_;
    const auto& caps = capsules_[static_cast<std::size_t>(step)];
    for (const Point2d& dir : directions_) {
      const Point2d q = from + radius * dir;
      if (point_blocked<double>(q, caps, nullptr)) continue;
      // Zero radius collapses the ring; the closing sample at 2 pi may
      // repeat the first. Either way the copy cannot change the value.
      if (!out.empty() && (radius == 0.0 || out.front().point == q)) continue;
      out.push_back({q, 0.0});
    }
    if (out.empty() && !point_blocked<double>(from, caps, nullptr)) {
      out.push_back({from, 0.0});
    }
    return out;
  }

  void count_node() {
    if (++nodes_ > setup_.node_budget) {
      throw ResourceLimit("exact game recursion exceeded its node budget of " +
                              std::to_string(setup_.node_budget) +
                              " nodes; use a smaller partition level or a "
                              "larger angular step",
                          setup_.node_budget);
    }
  }

  // Value of finishing step n.step with the given endpoints, or the
  // capture instant when the step ends the game.
  std::optional<double> close_step(const Node& n, const Point2d& p,
                                   const Point2d& e, Node& next) const {
    next = Node{n.step + 1, false, p, e, Point2d::Zero(), n.running};
    switch (setup_.payoff.type()) {
      case PayoffKind::Type::kTerminal:
        break;
      case PayoffKind::Type::kMinOverTime:
        next.running = std::min(
            n.running,
            min_distance_between_moving_points(n.pursuer, p, n.evader, e));
        break;
      case PayoffKind::Type::kCaptureTime: {
        const auto s = first_time_within(n.pursuer, p, n.evader, e,
                                         setup_.payoff.alpha());
        if (s) return n.step * dt_ + *s * dt_;
        break;
      }
    }
    return std::nullopt;
  }

  double search(const Node& n, double alpha, double beta) {
    count_node();
    if (!n.reply && n.step == steps_) return leaf_value(n);

    const Bounds b = bounds(n);
    if (b.lower >= beta) return b.lower;
    if (b.upper <= alpha) return b.upper;
    alpha = std::max(alpha, b.lower);
    beta = std::min(beta, b.upper);

    const Robot mover = n.reply ? second_mover() : first_mover();
    const bool minimizing = mover == Robot::kPursuer;
    const Point2d& from = mover == Robot::kPursuer ? n.pursuer : n.evader;
    const std::size_t depth = 2 * static_cast<std::size_t>(n.step) +
                              (n.reply ? 1 : 0);
    auto& moves = moves_for(mover, from, n.step, depth);
    if (moves.empty()) return trapped_value(mover, n.step);

    // Whether choosing a move completes the step.
    const bool closes = n.reply || (mover == Robot::kPursuer &&
                                    evader_skips(n.step));
    // Order by how promising the move looks against the opponent's
    // committed (or current) position; stable, so index order breaks ties.
    const Point2d& target =
        n.reply ? n.pending
                : (mover == Robot::kPursuer ? n.evader : n.pursuer);
    for (Move& m : moves) {
      const double d = distance(m.point, target);
      m.key = minimizing ? d : -d;
    }
    std::stable_sort(moves.begin(), moves.end(),
                     [](const Move& a, const Move& c) { return a.key < c.key; });

    double best = minimizing ? kInfinity : -kInfinity;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const Point2d q = moves[i].point;
      double v;
      if (closes) {
        const Point2d& p = mover == Robot::kPursuer ? q : n.pending;
        const Point2d& e = mover == Robot::kEvader
                               ? q
                               : (n.reply ? n.pending : n.evader);
        Node next;
        const auto captured = close_step(n, p, e, next);
        v = captured ? (count_node(), *captured) : search(next, alpha, beta);
      } else {
        Node next = n;
        next.reply = true;
        next.pending = q;
        v = search(next, alpha, beta);
      }
      if (minimizing) {
        best = std::min(best, v);
        beta = std::min(beta, v);
      } else {
        best = std::max(best, v);
        alpha = std::max(alpha, v);
      }
      if (alpha >= beta) break;
    }
    return best;
  }

  const GameSetup& setup_;
  GameOrder order_;
  int steps_;
  double dt_;
  double r1_;
  double r2_;
  std::vector<Point2d> directions_;
  double alignment_;
  bool bounded_;
  std::vector<std::vector<Capsuled>> capsules_;
  std::vector<std::vector<Move>> scratch_;
  std::vector<Robot> moves_;
  std::size_t nodes_ = 0;
};

}  // namespace

GameSolution solve_game(const GameSetup& setup, GameOrder order) {
  if (setup.partition_level < 0 || setup.partition_level > 20) {
    throw InvalidParameter("partition_level must lie in [0, 20]");
  }
  if (!(setup.horizon >= 0.0) || !std::isfinite(setup.horizon)) {
    throw InvalidParameter("horizon must be nonnegative and finite");
  }
  branch_count(setup.delta_alpha);  // validates delta_alpha

  if (setup.horizon == 0.0) {
    // No motion is possible; every kind reduces to the initial separation.
    const double times[] = {0.0};
    const Point2d p[] = {setup.pursuer_start};
    const Point2d e[] = {setup.evader_start};
    return {payoff_between(setup.payoff, times, p, e), 1};
  }
  return GameSolver(setup, order).solve();
}

}  // namespace pursuit
