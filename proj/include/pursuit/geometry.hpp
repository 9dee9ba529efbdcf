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

// Planar primitives for the pursuit game: Euclidean distances, swept
// capsules and a uniform spatial hash used as a broad phase for obstacle
// queries. Everything here is templated on the scalar type and works on
// fixed-size Eigen column vectors.

#ifndef PURSUIT_GEOMETRY_HPP_
#define PURSUIT_GEOMETRY_HPP_

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pursuit/errors.hpp"

namespace pursuit {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using Point2d = Point2<double>;

template <typename Scalar>
struct Segment {
  Point2<Scalar> a;
  Point2<Scalar> b;
};

// Convex hull of two equal discs centered at the axis endpoints.
template <typename Scalar>
struct Capsule {
  Segment<Scalar> axis;
  Scalar radius = Scalar(0);
};

using Segmentd = Segment<double>;
using Capsuled = Capsule<double>;

template <typename Scalar>
Scalar distance(const Point2<Scalar>& p, const Point2<Scalar>& q) {
  return (p - q).norm();
}

template <typename Scalar>
Scalar point_segment_distance(const Point2<Scalar>& p,
                              const Segment<Scalar>& s) {
  const Point2<Scalar> d = s.b - s.a;
  const Scalar len2 = d.squaredNorm();
  if (len2 == Scalar(0)) return distance(p, s.a);
  const Scalar u = std::clamp((p - s.a).dot(d) / len2, Scalar(0), Scalar(1));
  return (s.a + u * d - p).norm();
}

// Closed containment: a point on the capsule boundary is inside.
template <typename Scalar>
bool point_in_capsule(const Point2<Scalar>& p, const Capsule<Scalar>& c) {
  return point_segment_distance(p, c.axis) <= c.radius;
}

namespace detail {

// Parameter in [0, 1] minimizing |delta0 + s * delta_v|.
template <typename Scalar>
Scalar closest_approach_parameter(const Point2<Scalar>& delta0,
                                  const Point2<Scalar>& delta_v) {
  const Scalar vv = delta_v.squaredNorm();
  if (vv == Scalar(0)) return Scalar(0);
  return std::clamp(-delta0.dot(delta_v) / vv, Scalar(0), Scalar(1));
}

}  // namespace detail

// Minimum over s in [0, 1] of |(p0 + s (p1 - p0)) - (q0 + s (q1 - q0))|.
template <typename Scalar>
Scalar min_distance_between_moving_points(const Point2<Scalar>& p0,
                                          const Point2<Scalar>& p1,
                                          const Point2<Scalar>& q0,
                                          const Point2<Scalar>& q1) {
  const Point2<Scalar> delta0 = q0 - p0;
  const Point2<Scalar> delta_v = (q1 - q0) - (p1 - p0);
  const Scalar s = detail::closest_approach_parameter(delta0, delta_v);
  // The endpoint terms keep the result <= both endpoint distances bit-exactly.
  return std::min({(delta0 + s * delta_v).norm(), distance(p0, q0),
                   distance(p1, q1)});
}

// Smallest s in [0, 1] at which the two linearly moving points are within
// `alpha` of each other, or nullopt when they never are. Consistent with
// min_distance_between_moving_points: a value is returned exactly when that
// minimum is <= alpha.
template <typename Scalar>
std::optional<Scalar> first_time_within(const Point2<Scalar>& p0,
                                        const Point2<Scalar>& p1,
                                        const Point2<Scalar>& q0,
                                        const Point2<Scalar>& q1,
                                        Scalar alpha) {
  const Point2<Scalar> delta0 = q0 - p0;
  const Point2<Scalar> delta_v = (q1 - q0) - (p1 - p0);
  if (delta0.norm() <= alpha) return Scalar(0);
  const Scalar s_min = detail::closest_approach_parameter(delta0, delta_v);
  if ((delta0 + s_min * delta_v).norm() > alpha) return std::nullopt;
  // |delta0 + s delta_v|^2 = alpha^2, smaller root.
  const Scalar a = delta_v.squaredNorm();
  const Scalar b = Scalar(2) * delta0.dot(delta_v);
  const Scalar c = delta0.squaredNorm() - alpha * alpha;
  const Scalar disc = std::max(Scalar(0), b * b - Scalar(4) * a * c);
  const Scalar root = (-b - std::sqrt(disc)) / (Scalar(2) * a);
  return std::clamp(root, Scalar(0), s_min);
}

struct CellKey {
  std::int64_t ix = 0;
  std::int64_t iy = 0;

  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    const auto h1 = std::hash<std::int64_t>{}(k.ix);
    const auto h2 = std::hash<std::int64_t>{}(k.iy);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

// Uniform grid mapping integer cell coordinates to the indices of the
// capsules whose inflated bounding box overlaps the cell. Immutable after
// grid_build.
template <typename Scalar>
class SpatialHashGrid {
 public:
  using CellMap = std::unordered_map<CellKey, std::vector<std::size_t>,
                                     CellKeyHash>;

  SpatialHashGrid(Scalar cell_size, CellMap cells)
      : cell_size_(cell_size), cells_(std::move(cells)) {}

  Scalar cell_size() const { return cell_size_; }
  const CellMap& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  CellKey cell_of(const Point2<Scalar>& p) const {
    return {static_cast<std::int64_t>(std::floor(p.x() / cell_size_)),
            static_cast<std::int64_t>(std::floor(p.y() / cell_size_))};
  }

 private:
  Scalar cell_size_;
  CellMap cells_;
};

using SpatialHashGridd = SpatialHashGrid<double>;

template <typename Scalar>
SpatialHashGrid<Scalar> grid_build(std::span<const Capsule<Scalar>> capsules,
                                   Scalar cell_size) {
  if (!(cell_size > Scalar(0)) || !std::isfinite(cell_size)) {
    throw InvalidParameter("grid_build: cell_size must be positive and finite");
  }
  typename SpatialHashGrid<Scalar>::CellMap cells;
  cells.reserve(capsules.size());
  const auto cell_index = [cell_size](Scalar v) {
    return static_cast<std::int64_t>(std::floor(v / cell_size));
  };
  for (std::size_t i = 0; i < capsules.size(); ++i) {
    const Capsule<Scalar>& c = capsules[i];
    const Point2<Scalar> lo = c.axis.a.cwiseMin(c.axis.b).array() - c.radius;
    const Point2<Scalar> hi = c.axis.a.cwiseMax(c.axis.b).array() + c.radius;
    for (auto ix = cell_index(lo.x()); ix <= cell_index(hi.x()); ++ix) {
      for (auto iy = cell_index(lo.y()); iy <= cell_index(hi.y()); ++iy) {
        cells[CellKey{ix, iy}].push_back(i);
      }
    }
  }
  return SpatialHashGrid<Scalar>(cell_size, std::move(cells));
}

template <typename Scalar>
SpatialHashGrid<Scalar> grid_build(const std::vector<Capsule<Scalar>>& capsules,
                                   Scalar cell_size) {
  return grid_build(std::span<const Capsule<Scalar>>(capsules), cell_size);
}

// Candidate capsule indices for p: sorted, unique, and a superset of the
// capsules that contain p.
template <typename Scalar>
std::vector<std::size_t> grid_query(const SpatialHashGrid<Scalar>& grid,
                                    const Point2<Scalar>& p) {
  const auto it = grid.cells().find(grid.cell_of(p));
  if (it == grid.cells().end()) return {};
  std::vector<std::size_t> out = it->second;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Exact test against every capsule, optionally filtered by the grid first.
template <typename Scalar>
bool point_blocked(const Point2<Scalar>& p,
                   std::span<const Capsule<Scalar>> capsules,
                   const SpatialHashGrid<Scalar>* grid) {
  if (grid != nullptr) {
    const auto it = grid->cells().find(grid->cell_of(p));
    if (it == grid->cells().end()) return false;
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](std::size_t i) {
                         return point_in_capsule(p, capsules[i]);
                       });
  }
  return std::any_of(capsules.begin(), capsules.end(),
                     [&](const Capsule<Scalar>& c) {
                       return point_in_capsule(p, c);
                     });
}

}  // namespace pursuit

#endif  // PURSUIT_GEOMETRY_HPP_
