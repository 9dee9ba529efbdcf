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

// Moving circular obstacles O(t) and the capsules they sweep per step.

#ifndef PURSUIT_OBSTACLES_HPP_
#define PURSUIT_OBSTACLES_HPP_

#include <cstdint>
#include <variant>
#include <vector>

#include "pursuit/geometry.hpp"

namespace pursuit {

struct Box {
  Point2d min;
  Point2d max;

  friend bool operator==(const Box&, const Box&) = default;
};

struct StaticMotion {
  Point2d center;

  friend bool operator==(const StaticMotion&, const StaticMotion&) = default;
};

struct LinearMotion {
  Point2d start;
  Point2d velocity;  // meters per second

  friend bool operator==(const LinearMotion&, const LinearMotion&) = default;
};

// Starts at a uniform point of `bounds`, then repeatedly draws a uniform
// waypoint and travels to it at constant `speed`. Draws come from
// std::mt19937_64 seeded with `seed`; doubles take the top 53 bits, so the
// path is bit-identical on every conforming platform.
struct RandomWaypointMotion {
  Box bounds;
  double speed = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const RandomWaypointMotion&,
                         const RandomWaypointMotion&) = default;
};

using ObstacleMotion =
    std::variant<StaticMotion, LinearMotion, RandomWaypointMotion>;

class ObstacleTrack {
 public:
  ObstacleTrack(double radius, ObstacleMotion motion);

  double radius() const { return radius_; }
  const ObstacleMotion& motion() const { return motion_; }

  friend bool operator==(const ObstacleTrack&, const ObstacleTrack&) = default;

 private:
  double radius_;
  ObstacleMotion motion_;
};

struct ObstacleField {
  std::vector<ObstacleTrack> tracks;

  friend bool operator==(const ObstacleField&, const ObstacleField&) = default;
};

Point2d obstacle_center(const ObstacleTrack& track, double t);

// Axis from the centers at t0 and t1, radius of the obstacle. Waypoint
// kinks strictly inside (t0, t1) are replaced by the chord.
Capsuled sweep_capsule(const ObstacleTrack& track, double t0, double t1);

std::vector<Capsuled> sweep_capsules(const ObstacleField& field, double t0,
                                     double t1);

double max_obstacle_radius(const ObstacleField& field);

// Seed for the index-th random obstacle of a scenario with seed `seed`
// (splitmix64 finalizer over the pair).
std::uint64_t derive_obstacle_seed(std::uint64_t seed, std::size_t index);

}  // namespace pursuit

#endif  // PURSUIT_OBSTACLES_HPP_
