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

#include "pursuit/obstacles.hpp"

#include <cmath>
#include <random>

namespace pursuit {

namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Point2d draw_point(const Box& box, std::mt19937_64& rng) {
  const double u = unit_uniform(rng);
  const double v = unit_uniform(rng);
  return {box.min.x() + u * (box.max.x() - box.min.x()),
          box.min.y() + v * (box.max.y() - box.min.y())};
}

Point2d waypoint_center(const RandomWaypointMotion& m, double t) {
  std::mt19937_64 rng(m.seed);
  Point2d from = draw_point(m.bounds, rng);
  if (m.speed == 0.0 || m.bounds.min == m.bounds.max) return from;
  double elapsed = 0.0;
  // Each leg consumes two draws; the loop ends because every leg has
  // positive duration except when it draws the current point exactly.
  while (true) {
    const Point2d to = draw_point(m.bounds, rng);
    const double leg = distance(from, to) / m.speed;
    if (t <= elapsed + leg) {
      if (leg == 0.0) return to;
      const double frac = (t - elapsed) / leg;
      return from + frac * (to - from);
    }
    elapsed += leg;
    from = to;
  }
}

struct CenterVisitor {
  double t;

  Point2d operator()(const StaticMotion& m) const { return m.center; }
  Point2d operator()(const LinearMotion& m) const {
    return m.start + t * m.velocity;
  }
  Point2d operator()(const RandomWaypointMotion& m) const {
    return waypoint_center(m, t);
  }
};

bool finite(const Point2d& p) { return p.allFinite(); }

}  // namespace

ObstacleTrack::ObstacleTrack(double radius, ObstacleMotion motion)
    : radius_(radius), motion_(std::move(motion)) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidParameter("obstacle radius must be positive and finite");
  }
  if (const auto* s = std::get_if<StaticMotion>(&motion_)) {
    if (!finite(s->center)) throw InvalidParameter("obstacle center not finite");
  } else if (const auto* l = std::get_if<LinearMotion>(&motion_)) {
    if (!finite(l->start) || !finite(l->velocity)) {
      throw InvalidParameter("linear obstacle start/velocity not finite");
    }
  } else {
    const auto& w = std::get<RandomWaypointMotion>(motion_);
    if (!finite(w.bounds.min) || !finite(w.bounds.max) ||
        (w.bounds.min.array() > w.bounds.max.array()).any()) {
      throw InvalidParameter("random obstacle bounds must satisfy min <= max");
    }
    if (!(w.speed >= 0.0) || !std::isfinite(w.speed)) {
      throw InvalidParameter("random obstacle speed must be nonnegative");
    }
  }
}

Point2d obstacle_center(const ObstacleTrack& track, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidParameter("obstacle_center: t must be nonnegative");
  }
  return std::visit(CenterVisitor{t}, track.motion());
}

Capsuled sweep_capsule(const ObstacleTrack& track, double t0, double t1) {
  if (!(t0 >= 0.0)) throw InvalidParameter("sweep_capsule: t0 must be >= 0");
  if (t0 > t1) throw InvalidParameter("sweep_capsule: t0 > t1");
  return {{obstacle_center(track, t0), obstacle_center(track, t1)},
          track.radius()};
}

std::vector<Capsuled> sweep_capsules(const ObstacleField& field, double t0,
                                     double t1) {
  std::vector<Capsuled> out;
  out.reserve(field.tracks.size());
  for (const auto& track : field.tracks) {
    out.push_back(sweep_capsule(track, t0, t1));
  }
  return out;
}

double max_obstacle_radius(const ObstacleField& field) {
  double r = 0.0;
  for (const auto& track : field.tracks) r = std::max(r, track.radius());
  return r;
}

std::uint64_t derive_obstacle_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace pursuit
