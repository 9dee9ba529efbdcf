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

// Generalized dynamic systems for simple-motion robots. The attainability
// set of a robot with speed bound v after time t is the closed disc of
// radius v * t about its start; the decision tree only ever branches on a
// uniform angular subdivision of that disc's boundary.

#ifndef PURSUIT_DYNAMICS_HPP_
#define PURSUIT_DYNAMICS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "pursuit/geometry.hpp"

namespace pursuit {

class AttainabilitySpec {
 public:
  explicit AttainabilitySpec(double max_speed);

  double max_speed() const { return max_speed_; }

  friend bool operator==(const AttainabilitySpec&,
                         const AttainabilitySpec&) = default;

 private:
  double max_speed_;
};

struct ReachableBoundary {
  Point2d center;
  double radius = 0.0;
  // Ordered by increasing angle k * delta_alpha, k = 0, 1, ...
  std::vector<Point2d> samples;
};

struct Candidate {
  std::size_t branch = 0;
  Point2d point;
};

double reach_set_radius(const AttainabilitySpec& spec, double dt);

// floor(2 pi / delta_alpha) + 1. Throws InvalidParameter unless
// 0 < delta_alpha <= 2 pi.
std::size_t branch_count(double delta_alpha);

// Unit vectors at angles k * delta_alpha for k < branch_count(delta_alpha).
std::vector<Point2d> unit_directions(double delta_alpha);

// Largest angular gap between cyclically consecutive unit directions.
double max_angular_gap(double delta_alpha);

ReachableBoundary subdivide_boundary(const Point2d& center,
                                     const AttainabilitySpec& spec, double dt,
                                     double delta_alpha);

// Same as subdivide_boundary with the directions precomputed.
ReachableBoundary subdivide_boundary(const Point2d& center, double radius,
                                     std::span<const Point2d> directions);

// Sampled estimate of the Hausdorff distance between two finite point sets.
double sampled_hausdorff(std::span<const Point2d> a, std::span<const Point2d> b);

// Exact Hausdorff distance between the closed discs D(c1, r1) and D(c2, r2).
double disc_hausdorff(const Point2d& c1, double r1, const Point2d& c2,
                      double r2);

// Checks P(x0, t2) == union over y in P(x0, t1) of P(y, t2 - t1) by sampled
// Hausdorff estimation with `angular_samples` directions. True iff the
// estimate is <= tol.
bool check_semigroup(const AttainabilitySpec& spec, const Point2d& x0,
                     double t1, double t2, double tol,
                     std::size_t angular_samples = 720);

// Boundary samples lying in none of the capsules, in branch order. With a
// grid the broad phase runs first; the result does not depend on it.
std::vector<Candidate> feasible_candidates(
    const ReachableBoundary& boundary, std::span<const Capsuled> obstacles,
    const SpatialHashGridd* grid = nullptr);

}  // namespace pursuit

#endif  // PURSUIT_DYNAMICS_HPP_
