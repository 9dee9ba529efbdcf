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

#include "pursuit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace pursuit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_delta_alpha(double delta_alpha) {
  if (!(delta_alpha > 0.0) || !(delta_alpha <= kTwoPi)) {
    throw InvalidParameter("delta_alpha must lie in (0, 2*pi]");
  }
}

}  // namespace

AttainabilitySpec::AttainabilitySpec(double max_speed) : max_speed_(max_speed) {
  if (!(max_speed > 0.0) || !std::isfinite(max_speed)) {
    throw InvalidParameter("max_speed must be positive and finite");
  }
}

double reach_set_radius(const AttainabilitySpec& spec, double dt) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) {
    throw InvalidParameter("reach_set_radius: dt must be nonnegative");
  }
  return spec.max_speed() * dt;
}

std::size_t branch_count(double delta_alpha) {
  require_delta_alpha(delta_alpha);
  return static_cast<std::size_t>(std::floor(kTwoPi / delta_alpha)) + 1;
}

std::vector<Point2d> unit_directions(double delta_alpha) {
  const std::size_t n = branch_count(delta_alpha);
  std::vector<Point2d> dirs;
  dirs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = static_cast<double>(k) * delta_alpha;
    dirs.emplace_back(std::cos(angle), std::sin(angle));
  }
  return dirs;
}

double max_angular_gap(double delta_alpha) {
  const std::size_t n = branch_count(delta_alpha);
  const double last = static_cast<double>(n - 1) * delta_alpha;
  return std::max(delta_alpha, kTwoPi - last);
}

ReachableBoundary subdivide_boundary(const Point2d& center, double radius,
                                     std::span<const Point2d> directions) {
  ReachableBoundary boundary{center, radius, {}};
  boundary.samples.reserve(directions.size());
  for (const Point2d& dir : directions) {
    boundary.samples.push_back(center + radius * dir);
  }
  return boundary;
}

ReachableBoundary subdivide_boundary(const Point2d& center,
                                     const AttainabilitySpec& spec, double dt,
                                     double delta_alpha) {
  const double radius = reach_set_radius(spec, dt);
  const auto dirs = unit_directions(delta_alpha);
  return subdivide_boundary(center, radius, dirs);
}

double sampled_hausdorff(std::span<const Point2d> a,
                         std::span<const Point2d> b) {
  if (a.empty() || b.empty()) {
    throw InvalidInput("sampled_hausdorff: point sets must be nonempty");
  }
  const auto directed = [](std::span<const Point2d> from,
                           std::span<const Point2d> to) {
    double worst = 0.0;
    for (const Point2d& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Point2d& q : to) best = std::min(best, (p - q).squaredNorm());
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

double disc_hausdorff(const Point2d& c1, double r1, const Point2d& c2,
                      double r2) {
  return distance(c1, c2) + std::abs(r1 - r2);
}

bool check_semigroup(const AttainabilitySpec& spec, const Point2d& x0,
                     double t1, double t2, double tol,
                     std::size_t angular_samples) {
  if (!(t1 >= 0.0) || !(t2 >= 0.0)) {
    throw InvalidParameter("check_semigroup: times must be nonnegative");
  }
  if (t1 > t2) throw InvalidParameter("check_semigroup: t1 > t2");
  if (angular_samples < 3) {
    throw InvalidParameter("check_semigroup: need at least 3 samples");
  }
  const double whole = spec.max_speed() * t2;
  const double first = spec.max_speed() * t1;
  const double rest = spec.max_speed() * (t2 - t1);

  std::vector<Point2d> dirs;
  dirs.reserve(angular_samples);
  for (std::size_t k = 0; k < angular_samples; ++k) {
    const double angle = kTwoPi * static_cast<double>(k) /
                         static_cast<double>(angular_samples);
    dirs.emplace_back(std::cos(angle), std::sin(angle));
  }

  // Intermediate positions: center plus the boundary of P(x0, t1).
  std::vector<Point2d> middle{x0};
  for (const Point2d& d : dirs) middle.push_back(x0 + first * d);

  // Both sides are unions of discs of radius `rest` (the left side being the
  // single disc about x0 of radius `whole`), so point-to-set distances are
  // exact and only the sampling of the sets is approximate.
  //   sup over b in rhs of d(b, lhs): exact, through the disc centers.
  double rhs_to_lhs = 0.0;
  for (const Point2d& y : middle) {
    rhs_to_lhs = std::max(rhs_to_lhs, distance(y, x0) + rest - whole);
  }
  //   sup over a in lhs of d(a, rhs): sampled on the boundary of lhs, where
  //   the distance to a subset of the disc is largest.
  double lhs_to_rhs = 0.0;
  for (const Point2d& d : dirs) {
    const Point2d a = x0 + whole * d;
    double nearest = std::numeric_limits<double>::infinity();
    for (const Point2d& y : middle) nearest = std::min(nearest, distance(a, y));
    lhs_to_rhs = std::max(lhs_to_rhs, nearest - rest);
  }
  return std::max(rhs_to_lhs, lhs_to_rhs) <= tol;
}

std::vector<Candidate> feasible_candidates(const ReachableBoundary& boundary,
                                           std::span<const Capsuled> obstacles,
                                           const SpatialHashGridd* grid) {
  std::vector<Candidate> out;
  out.reserve(boundary.samples.size());
  for (std::size_t i = 0; i < boundary.samples.size(); ++i) {
    const Point2d& p = boundary.samples[i];
    if (!point_blocked(p, obstacles, grid)) out.push_back({i, p});
  }
  return out;
}

}  // namespace pursuit
