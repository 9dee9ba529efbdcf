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

#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pursuit/geometry.hpp"

namespace {

using pursuit::Capsuled;
using pursuit::Point2d;

oracle::P O(const Point2d& p) { return {p.x(), p.y()}; }

Point2d random_point(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double x = u(rng);
  return {x, u(rng)};
}

Capsuled random_capsule(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r(0.05, 2.0);
  Point2d a = random_point(rng, -10, 10);
  Point2d b = a + random_point(rng, -3, 3);
  return {{a, b}, r(rng)};
}

}  // namespace

TEST_CASE("distance examples") {
  CHECK(pursuit::distance(Point2d(0, 0), Point2d(0, 0)) == 0.0);
  CHECK(pursuit::distance(Point2d(0, 0), Point2d(3, 4)) == 5.0);
  CHECK(pursuit::distance(Point2d(1, 1), Point2d(2, 2)) ==
        doctest::Approx(1.41421356).epsilon(1e-9));
}

TEST_CASE("distance is symmetric and obeys the triangle inequality") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Point2d p = random_point(rng, -100, 100);
    const Point2d q = random_point(rng, -100, 100);
    const Point2d r = random_point(rng, -100, 100);
    CHECK(pursuit::distance(p, q) == pursuit::distance(q, p));
    CHECK(pursuit::distance(p, r) <=
          pursuit::distance(p, q) + pursuit::distance(q, r) + 1e-12);
  }
}

TEST_CASE("point to segment examples") {
  const pursuit::Segmentd s{Point2d(0, 0), Point2d(2, 0)};
  CHECK(pursuit::point_segment_distance(Point2d(1, 1), s) == 1.0);
  CHECK(pursuit::point_segment_distance(Point2d(3, 0), s) == 1.0);
  CHECK(pursuit::point_segment_distance(
            Point2d(0, 0), pursuit::Segmentd{Point2d(0, 0), Point2d(0, 0)}) ==
        0.0);
}

TEST_CASE("capsule containment examples") {
  const Capsuled disc{{Point2d(0, 0), Point2d(0, 0)}, 1.0};
  CHECK(pursuit::point_in_capsule(Point2d(0.5, 0), disc));
  CHECK_FALSE(pursuit::point_in_capsule(Point2d(2, 0), disc));
  CHECK(pursuit::point_in_capsule(
      Point2d(1, 0.4), Capsuled{{Point2d(0, 0), Point2d(2, 0)}, 0.5}));
  // Closed: grazing contact is a hit.
  CHECK(pursuit::point_in_capsule(Point2d(1, 0), disc));
}

TEST_CASE("capsule containment agrees with sampled sweep") {
  std::mt19937_64 rng(12);
  int compared = 0;
  for (int i = 0; i < 400; ++i) {
    const Capsuled c = random_capsule(rng);
    const Point2d p = random_point(rng, -12, 12);
    const double d = oracle::point_segment(O(p), O(c.axis.a), O(c.axis.b));
    if (std::abs(d - c.radius) < 1e-3) continue;  // too close to call by sampling
    ++compared;
    CHECK(pursuit::point_in_capsule(p, c) ==
          oracle::in_swept_disc(O(p), O(c.axis.a), O(c.axis.b), c.radius, 1000));
  }
  CHECK(compared > 300);
}

TEST_CASE("moving points examples") {
  CHECK(pursuit::min_distance_between_moving_points(
            Point2d(0, 0), Point2d(2, 0), Point2d(1, 1), Point2d(1, 1)) == 1.0);
  CHECK(pursuit::min_distance_between_moving_points(
            Point2d(0, 0), Point2d(0, 0), Point2d(5, 0), Point2d(5, 0)) == 5.0);
  CHECK(pursuit::min_distance_between_moving_points(
            Point2d(0, 0), Point2d(2, 0), Point2d(2, 0), Point2d(0, 0)) == 0.0);
}

TEST_CASE("moving points minimum matches dense sampling") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const Point2d p0 = random_point(rng, -5, 5), p1 = random_point(rng, -5, 5);
    const Point2d q0 = random_point(rng, -5, 5), q1 = random_point(rng, -5, 5);
    const double got = pursuit::min_distance_between_moving_points(p0, p1, q0, q1);
    CHECK(got <= pursuit::distance(p0, q0));
    CHECK(got <= pursuit::distance(p1, q1));
    // 10^4 samples, then a local polish around the best one: near a
    // crossing the distance is |linear| and raw sampling is only O(1e-4).
    auto at = [&](double s) {
      return oracle::dist(oracle::lerp(O(p0), O(p1), s), oracle::lerp(O(q0), O(q1), s));
    };
    int best = 0;
    for (int k = 1; k <= 10000; ++k) {
      if (at(k / 10000.0) < at(best / 10000.0)) best = k;
    }
    const double lo = std::max(0, best - 1) / 10000.0;
    const double hi = std::min(10000, best + 1) / 10000.0;
    const double sampled = oracle::convex_min(
        [&](double u) { return at(lo + (hi - lo) * u); }, 100);
    CHECK(got <= sampled + 1e-12);
    CHECK(std::abs(got - sampled) <= 1e-6);
  }
}

TEST_CASE("first time within") {
  // Head-on at closing speed 2 from distance 4: within 1 after 3/4 of the step.
  auto t = pursuit::first_time_within(Point2d(0, 0), Point2d(2, 0),
                                      Point2d(4, 0), Point2d(2, 0), 1.0);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(0.75));
  CHECK(pursuit::first_time_within(Point2d(0, 0), Point2d(0, 0), Point2d(0, 0.5),
                                   Point2d(0, 0.5), 1.0) == 0.0);
  CHECK_FALSE(pursuit::first_time_within(Point2d(0, 0), Point2d(0, 0),
                                         Point2d(3, 0), Point2d(3, 0), 1.0));

  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const Point2d p0 = random_point(rng, -3, 3), p1 = random_point(rng, -3, 3);
    const Point2d q0 = random_point(rng, -3, 3), q1 = random_point(rng, -3, 3);
    const double alpha = 0.5;
    const auto got = pursuit::first_time_within(p0, p1, q0, q1, alpha);
    // Linear scan for the first sample within alpha.
    std::optional<double> scan;
    for (int k = 0; k <= 20000 && !scan; ++k) {
      const double s = k / 20000.0;
      if (oracle::dist(oracle::lerp(O(p0), O(p1), s),
                       oracle::lerp(O(q0), O(q1), s)) <= alpha) {
        scan = s;
      }
    }
    if (scan) {
      REQUIRE(got.has_value());
      CHECK(*got <= *scan + 1e-12);
      CHECK(*got >= *scan - 1e-4);
    } else if (got) {
      // A miss by sampling can only be a graze.
      CHECK(pursuit::min_distance_between_moving_points(p0, p1, q0, q1) >
            alpha - 1e-6);
    }
  }
}

TEST_CASE("grid build examples") {
  const Capsuled c{{Point2d(0, 0), Point2d(0, 0)}, 0.5};
  const auto grid = pursuit::grid_build(std::vector<Capsuled>{c}, 1.0);
  std::set<std::pair<long long, long long>> cells;
  for (const auto& [key, ids] : grid.cells()) {
    CHECK(ids == std::vector<std::size_t>{0});
    cells.insert({key.ix, key.iy});
  }
  CHECK(cells == std::set<std::pair<long long, long long>>{
                     {-1, -1}, {-1, 0}, {0, -1}, {0, 0}});

  CHECK(pursuit::grid_build(std::vector<Capsuled>{}, 1.0).cells().empty());

  const Capsuled far{{Point2d(100, 100), Point2d(101, 100)}, 0.5};
  const auto two = pursuit::grid_build(std::vector<Capsuled>{c, far}, 1.0);
  for (const auto& [key, ids] : two.cells()) CHECK(ids.size() == 1);

  CHECK_THROWS(pursuit::grid_build(std::vector<Capsuled>{c}, 0.0));
  CHECK_THROWS(pursuit::grid_build(std::vector<Capsuled>{c}, -1.0));
}

TEST_CASE("grid query examples") {
  const std::vector<Capsuled> caps{{{Point2d(0, 0), Point2d(1, 0)}, 0.5},
                                   {{Point2d(5, 5), Point2d(5, 5)}, 1.0}};
  const auto grid = pursuit::grid_build(caps, 1.5);
  CHECK(pursuit::grid_query(grid, Point2d(50, -50)).empty());
  const auto hit = pursuit::grid_query(grid, Point2d(5, 5));
  CHECK(std::find(hit.begin(), hit.end(), 1u) != hit.end());
}

TEST_CASE("grid query is a superset of exact containment") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> count(0, 12);
  std::uniform_real_distribution<double> cell(0.3, 6.0);
  for (int config = 0; config < 1000; ++config) {
    std::vector<Capsuled> caps(count(rng));
    for (auto& c : caps) c = random_capsule(rng);
    const auto grid = pursuit::grid_build(caps, cell(rng));
    for (int q = 0; q < 20; ++q) {
      const Point2d p = random_point(rng, -12, 12);
      const auto got = pursuit::grid_query(grid, p);
      CHECK(std::is_sorted(got.begin(), got.end()));
      for (std::size_t i = 0; i < caps.size(); ++i) {
        if (oracle::point_segment(O(p), O(caps[i].axis.a), O(caps[i].axis.b)) <=
            caps[i].radius - 1e-9) {
          CHECK(std::find(got.begin(), got.end(), i) != got.end());
        }
      }
      CHECK(pursuit::point_blocked<double>(p, caps, &grid) ==
            pursuit::point_blocked<double>(p, caps, nullptr));
    }
  }
}

TEST_CASE("geometry is generic over the scalar") {
  using pursuit::Point2;
  const Point2<float> p(0.0f, 0.0f), q(3.0f, 4.0f);
  CHECK(pursuit::distance(p, q) == 5.0f);
  const pursuit::Capsule<long double> c{{Point2<long double>(0, 0),
                                         Point2<long double>(2, 0)},
                                        0.5L};
  CHECK(pursuit::point_in_capsule(Point2<long double>(1, 0.4L), c));
}
