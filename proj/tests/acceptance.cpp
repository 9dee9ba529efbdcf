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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and budgets are fixed here, not tuned.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pursuit/artifacts.hpp"
#include "pursuit/commands.hpp"
#include "pursuit/dynamics.hpp"
#include "pursuit/engine.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/game.hpp"
#include "pursuit/scenario_io.hpp"

namespace {

using pursuit::AttainabilitySpec;
using pursuit::GameSetup;
using pursuit::PayoffKind;
using pursuit::Point2d;
using pursuit::Scenario;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) {
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Point2d random_point(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double x = u(rng);
  return {x, u(rng)};
}

GameSetup game(Point2d p, Point2d e, double s1, double s2, double T, int n,
               double da) {
  return GameSetup{p, e, AttainabilitySpec(s1), AttainabilitySpec(s2), {}, T, n,
                   da, PayoffKind::terminal()};
}

// --- 1 ---------------------------------------------------------------------

Verdict branch_count() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto p = pursuit::subdivide_boundary(Point2d(0, 0), AttainabilitySpec(10),
                                             0.2, 0.2);
  const auto e = pursuit::subdivide_boundary(Point2d(15, 0), AttainabilitySpec(8),
                                             0.2, 0.2);
  const auto pc = pursuit::feasible_candidates(p, {});
  const auto ec = pursuit::feasible_candidates(e, {});
  const auto d = pursuit::step_minimax(Point2d(0, 0), Point2d(15, 0),
                                       AttainabilitySpec(10), AttainabilitySpec(8),
                                       0.2, {}, 0.2, PayoffKind::terminal());
  v.require(pursuit::branch_count(0.2) == 32, "branch_count(0.2) != 32");
  v.require(pc.size() == 32 && ec.size() == 32, "candidate sets are not 32 each");
  v.require(d.pursuer_pruned == 0 && d.evader_pruned == 0, "branches pruned");
  const double t = seconds_since(t0);
  v.require(t < 1.0, "runtime");
  v.note(fmt("pursuer %g, evader %g candidates, %.3fs", double(pc.size()),
             double(ec.size()), t));
  return v;
}

// --- 2 ---------------------------------------------------------------------

Verdict baseline_run() {
  Verdict v;
  const auto t0 = Clock::now();
  double worst_rise = 0.0, worst_ratio = 0.0;
  int cases = 0, monotone = 0;
  for (double d0 : {5.0, 10.0, 15.0, 20.0}) {
    for (double angle : {0.0, 0.6435011087932844, 2.0}) {
      Scenario s;
      s.pursuer_start = {0, 0};
      s.evader_start = d0 * Point2d(std::cos(angle), std::sin(angle));
      s.pursuer_speed = 10;
      s.evader_speed = 8;
      s.horizon = 10;
      s.time_step = 0.2;
      s.delta_alpha = 0.2;
      const auto rec = pursuit::simulate(s);
      ++cases;
      v.require(rec.steps() == 50, "step count != 50");
      double rise = 0.0;
      for (std::size_t k = 1; k < rec.times.size(); ++k) {
        const double prev = (rec.pursuer_path[k - 1] - rec.evader_path[k - 1]).norm();
        const double cur = (rec.pursuer_path[k] - rec.evader_path[k]).norm();
        rise = std::max(rise, cur - prev);
      }
      worst_rise = std::max(worst_rise, rise);
      if (rise <= 1e-9) ++monotone;
      const double final_d = (rec.pursuer_path.back() - rec.evader_path.back()).norm();
      worst_ratio = std::max(worst_ratio, final_d / d0);
    }
  }
  const double t = seconds_since(t0);
  v.require(monotone == cases,
            fmt("distance rises in %g of %g runs (largest step-to-step rise %.4f)",
                cases - monotone, cases, worst_rise));
  v.require(worst_ratio < 0.5, fmt("final/initial distance %.4f", worst_ratio));
  v.require(t < 1.0 * cases, "runtime");
  v.note(fmt("worst final/initial %.4f, %.3fs for %g runs", worst_ratio, t, cases));
  return v;
}

// --- 3 ---------------------------------------------------------------------

Verdict figure_regimes() {
  Verdict v;
  const auto t0 = Clock::now();
  const std::filesystem::path dir = PURSUIT_SCENARIO_DIR;
  for (const char* name : {"fig_a", "fig_b", "fig_c", "fig_d"}) {
    try {
      const auto file = pursuit::load_scenario_file(dir / (std::string(name) + ".yaml"));
      const auto a = pursuit::cli::run(file);
      const auto b = pursuit::cli::run(file);
      const auto bad = pursuit::count_capsule_violations(file.scenario, a.record);
      v.require(bad == 0, std::string(name) + ": capsule violations");
      v.require(a.trajectory_csv == b.trajectory_csv && a.metadata_json == b.metadata_json &&
                    a.svg == b.svg,
                std::string(name) + ": artifacts differ between runs");
      v.require(a.record.steps() == 50, std::string(name) + ": step count");
      v.require(a.record.final_payoff <
                    (file.scenario.pursuer_start - file.scenario.evader_start).norm(),
                std::string(name) + ": did not close in");
    } catch (const std::exception& e) {
      v.require(false, std::string(name) + ": " + e.what());
    }
  }
  const double t = seconds_since(t0);
  v.require(t < 5.0, "runtime");
  v.note(fmt("4 scenarios twice in %.3fs", t));
  return v;
}

// --- 4 ---------------------------------------------------------------------

Verdict ordering_suite() {
  Verdict v;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> speed(0.3, 1.5), T(0.2, 3.0), da(0.8, 1.6);
  std::uniform_int_distribution<int> level(0, 2);
  int instances = 0, bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 60; ++i) {
    const auto s = game(random_point(rng, -3, 3), random_point(rng, -3, 3), speed(rng),
                        speed(rng), T(rng), level(rng), da(rng));
    const double u = pursuit::upper_value(s), l = pursuit::lower_value(s);
    ++instances;
    if (u < l - 1e-9) ++bad;
    worst = std::max(worst, l - u);
  }
  v.require(bad == 0, fmt("upper < lower - 1e-9 in %g instances", bad));

  // Attainability properties on the same run: nonempty, zero-time identity,
  // semigroup, joint continuity.
  int property_failures = 0;
  for (int i = 0; i < 50; ++i) {
    const AttainabilitySpec spec(speed(rng) * 5);
    const Point2d x = random_point(rng, -10, 10);
    std::uniform_real_distribution<double> t(0.0, 10.0);
    double t1 = t(rng), t2 = t(rng);
    if (t1 > t2) std::swap(t1, t2);
    const auto b = pursuit::subdivide_boundary(x, spec, t1, 0.2);
    const auto still = pursuit::subdivide_boundary(x, spec, 0.0, 0.2);
    bool ok = !b.samples.empty() && std::isfinite(b.radius);
    for (const auto& p : still.samples) ok = ok && p == x;
    ok = ok && pursuit::check_semigroup(spec, x, t1, t2, 1e-6);
    const double eps = 0.01;
    ok = ok && pursuit::disc_hausdorff(x, pursuit::reach_set_radius(spec, t1),
                                       x + Point2d(eps, 0),
                                       pursuit::reach_set_radius(spec, t1 + eps)) <=
                   eps * (1 + spec.max_speed()) + 1e-9;
    if (!ok) ++property_failures;
  }
  v.require(property_failures == 0, fmt("attainability properties failed %g times", property_failures));
  const double t = seconds_since(t0);
  v.require(t < 60.0, "runtime");
  v.note(fmt("%g instances, max(lower - upper) %.3g, %.2fs", instances, worst, t));
  return v;
}

// --- 5 ---------------------------------------------------------------------

Verdict refinement_suite() {
  Verdict v;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2025);
  std::uniform_real_distribution<double> speed(0.3, 1.5), T(0.5, 3.0);
  const double angles[] = {0.8, 1.0, 1.3};
  int instances = 0, gap_bad = 0, upper_bad = 0, lower_bad = 0;
  double worst_lower_drop = 0.0;
  for (int i = 0; i < 12; ++i) {
    const Point2d p = random_point(rng, -3, 3), e = random_point(rng, -3, 3);
    const double s1 = speed(rng), s2 = speed(rng), t = T(rng);
    const double da = angles[i % 3];
    double upper[3], lower[3];
    for (int n = 0; n <= 2; ++n) {
      const auto s = game(p, e, s1, s2, t, n, da);
      upper[n] = pursuit::upper_value(s);
      lower[n] = pursuit::lower_value(s);
    }
    ++instances;
    if (upper[2] - lower[2] > upper[0] - lower[0] + 1e-9) ++gap_bad;
    if (upper[1] > upper[0] + 1e-9 || upper[2] > upper[1] + 1e-9) ++upper_bad;
    if (lower[1] < lower[0] - 1e-9 || lower[2] < lower[1] - 1e-9) ++lower_bad;
    worst_lower_drop = std::max({worst_lower_drop, lower[0] - lower[1], lower[1] - lower[2]});
  }
  v.require(gap_bad == 0, fmt("gap grew in %g of %g", gap_bad, instances));
  v.require(upper_bad == 0, fmt("upper increased in %g of %g", upper_bad, instances));
  v.require(lower_bad == 0,
            fmt("lower decreased in %g of %g (largest drop %.4f)", lower_bad, instances,
                worst_lower_drop));
  const double t = seconds_since(t0);
  v.require(t < 120.0, "runtime");
  v.note(fmt("%g instances, %.2fs", instances, t));
  return v;
}

// --- 6 ---------------------------------------------------------------------

// Upper game on the inter-robot distance with 360 headings per robot, by
// backward induction on a 0.005-spaced distance grid. The continuous game is
// rotation invariant, so the distance is a sufficient state.
double fine_grid_oracle(double d0, double s1, double s2, double T, int steps) {
  const double dt = T / steps, r1 = s1 * dt, r2 = s2 * dt;
  const double h = 0.005, top = d0 + steps * r2 + 1.0;
  const int m = static_cast<int>(std::ceil(top / h)) + 1;
  const int headings = 360;
  std::vector<double> value(m), next(m);
  for (int i = 0; i < m; ++i) value[i] = i * h;
  auto interp = [&](const std::vector<double>& f, double d) {
    const double x = std::min(d / h, double(m - 1));
    const int i = std::min(static_cast<int>(x), m - 2);
    return f[i] + (x - i) * (f[i + 1] - f[i]);
  };
  std::vector<double> cs(headings), sn(headings);
  for (int k = 0; k < headings; ++k) {
    cs[k] = std::cos(2 * kPi * k / headings);
    sn[k] = std::sin(2 * kPi * k / headings);
  }
  for (int step = 0; step < steps; ++step) {
    for (int i = 0; i < m; ++i) {
      const double d = i * h;
      double best = 1e300;
      // Evader at (d, 0) relative to the pursuer; pursuer heading a,
      // evader heading b (both measured from the line of sight).
      for (int a = 0; a < headings; ++a) {
        const double px = r1 * cs[a], py = r1 * sn[a];
        double worst = -1e300;
        for (int b = 0; b < headings; ++b) {
          const double dx = d + r2 * cs[b] - px, dy = r2 * sn[b] - py;
          worst = std::max(worst, interp(value, std::hypot(dx, dy)));
          if (worst >= best) break;
        }
        best = std::min(best, worst);
      }
      next[i] = best;
    }
    value.swap(next);
  }
  return interp(value, d0);
}

Verdict analytic_value() {
  Verdict v;
  const auto t0 = Clock::now();
  const double exact = 4.0 - (1.0 - 0.5) * 2.0;
  const double oracle = fine_grid_oracle(4.0, 1.0, 0.5, 2.0, 8);
  const double t_oracle = seconds_since(t0);
  v.require(std::abs(oracle - exact) <= 0.05 * exact,
            fmt("oracle %.6f not within 5%% of %.1f", oracle, exact));
  const auto t1 = Clock::now();
  try {
    auto s = game({0, 0}, {4, 0}, 1.0, 0.5, 2.0, 3, 0.05);
    const auto sol = pursuit::solve_game(s, pursuit::GameOrder::kUpper);
    const double t = seconds_since(t1);
    v.require(std::abs(sol.value - exact) <= 0.05 * exact,
              fmt("upper value %.6f not within 5%% of %.1f", sol.value, exact));
    v.require(t < 600.0, "runtime");
    v.note(fmt("upper %.9f, oracle %.6f, %g nodes, %.2fs", sol.value, oracle,
               double(sol.nodes_visited), t));
  } catch (const std::exception& e) {
    v.require(false, e.what());
  }
  v.note(fmt("oracle %.2fs", t_oracle));
  return v;
}

// --- 7 ---------------------------------------------------------------------

Verdict capture() {
  Verdict v;
  const auto t0 = Clock::now();
  const double ts = pursuit::t_star(Point2d(0, 0), Point2d(3, 0), AttainabilitySpec(10),
                                    AttainabilitySpec(8));
  // Bisection on sampled containment; the ring includes the far point.
  auto contained = [](double t) {
    for (int k = 0; k < 720; ++k) {
      const double a = 2 * kPi * k / 720;
      const Point2d q = Point2d(3, 0) + 8 * t * Point2d(std::cos(a), std::sin(a));
      if (q.norm() > 10 * t + 1e-12) return false;
    }
    return true;
  };
  double lo = 0, hi = 100;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (contained(mid) ? hi : lo) = mid;
  }
  v.require(std::abs(ts - 1.5) <= 1e-9, fmt("t_star %.12f", ts));
  v.require(std::abs(ts - hi) <= 1e-9, fmt("bisection %.12f", hi));

  Scenario s;
  s.pursuer_start = {0, 0};
  s.evader_start = {3, 0};
  s.pursuer_speed = 10;
  s.evader_speed = 8;
  s.horizon = 10;
  s.time_step = 0.2;
  s.delta_alpha = 0.2;
  s.payoff = PayoffKind::capture_time(0.1);
  const auto rec = pursuit::simulate_until_capture(s, 10.0);
  if (rec.capture_time) {
    v.require(*rec.capture_time <= 1.75, fmt("captured at %.4f", *rec.capture_time));
    v.note(fmt("captured at %.4f", *rec.capture_time));
  } else {
    double closest = 1e300;
    for (std::size_t k = 1; k < rec.times.size(); ++k) {
      closest = std::min(closest, pursuit::min_distance_between_moving_points(
                                      rec.pursuer_path[k - 1], rec.pursuer_path[k],
                                      rec.evader_path[k - 1], rec.evader_path[k]));
    }
    v.require(false, fmt("no capture within alpha=0.1 by t=10 (closest approach %.4f)",
                         closest));
  }
  const double t = seconds_since(t0);
  v.require(t < 1.0, "runtime");
  v.note(fmt("t_star %.12f, bisection %.12f, %.3fs", ts, hi, t));
  return v;
}

// --- 8 ---------------------------------------------------------------------

Scenario random_obstacle_scene(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Scenario s;
  s.seed = seed;
  s.pursuer_start = random_point(rng, -8, 8);
  s.evader_start = random_point(rng, -8, 8);
  s.pursuer_speed = 10;
  s.evader_speed = 8;
  s.horizon = 2;
  s.time_step = 0.2;
  s.delta_alpha = 0.2;
  std::uniform_real_distribution<double> r(0.3, 1.5);
  std::uniform_int_distribution<int> count(5, 25), kind(0, 2);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    pursuit::ObstacleMotion motion;
    switch (kind(rng)) {
      case 0: motion = pursuit::StaticMotion{random_point(rng, -15, 15)}; break;
      case 1:
        motion = pursuit::LinearMotion{random_point(rng, -15, 15), random_point(rng, -3, 3)};
        break;
      default:
        motion = pursuit::RandomWaypointMotion{
            pursuit::Box{Point2d(-15, -15), Point2d(15, 15)}, 3.0, 0};
    }
    s.obstacles.tracks.emplace_back(r(rng), motion);
  }
  pursuit::apply_seed(s, seed);
  // Drop obstacles covering a start.
  auto& tracks = s.obstacles.tracks;
  tracks.erase(std::remove_if(tracks.begin(), tracks.end(),
                              [&](const pursuit::ObstacleTrack& tr) {
                                const Point2d c = pursuit::obstacle_center(tr, 0.0);
                                return (c - s.pursuer_start).norm() <= tr.radius() ||
                                       (c - s.evader_start).norm() <= tr.radius();
                              }),
               tracks.end());
  return s;
}

Verdict hash_equivalence() {
  Verdict v;
  const auto t0 = Clock::now();
  int same = 0, trapped = 0, pruned_steps = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Scenario on = random_obstacle_scene(seed);
    Scenario off = on;
    off.use_spatial_hash = false;
    std::string a, b;
    pursuit::GameRecord ra, rb;
    try { ra = pursuit::simulate(on); } catch (const pursuit::RobotTrapped& e) { a = e.what(); }
    try { rb = pursuit::simulate(off); } catch (const pursuit::RobotTrapped& e) { b = e.what(); }
    if (!a.empty()) ++trapped;
    if (ra == rb && a == b) ++same;
    for (const auto& [p, e] : ra.pruned_branch_counts) pruned_steps += (p + e) > 0;
  }
  const double t = seconds_since(t0);
  v.require(same == 200, fmt("%g of 200 records differ", 200 - same));
  v.require(t < 30.0, "runtime");
  v.note(fmt("200 scenes, %g steps with pruning, %g trapped alike, %.2fs", pruned_steps,
             trapped, t));
  return v;
}

// --- 9 ---------------------------------------------------------------------

// n_o obstacles at constant density around the chase, so the average number
// of capsules near a candidate does not depend on n_o.
Scenario benchmark_scene(int obstacles, bool hash) {
  Scenario s;
  s.pursuer_start = {0, 0};
  s.evader_start = {6, 0};
  s.pursuer_speed = 10;
  s.evader_speed = 8;
  s.horizon = 10;
  s.time_step = 0.2;
  s.delta_alpha = 0.05;
  s.use_spatial_hash = hash;
  std::mt19937_64 rng(99);
  const double half = 10.0 * std::sqrt(obstacles / 50.0);
  std::uniform_real_distribution<double> u(-half, half), v(-1, 1);
  while (static_cast<int>(s.obstacles.tracks.size()) < obstacles) {
    const Point2d c(u(rng), u(rng));
    if ((c - s.pursuer_start).norm() < 2 || (c - s.evader_start).norm() < 2) continue;
    s.obstacles.tracks.emplace_back(0.3, pursuit::LinearMotion{c, Point2d(v(rng), v(rng))});
  }
  return s;
}

double best_time(const Scenario& s, int repeats) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = Clock::now();
    try {
      (void)pursuit::simulate(s);
    } catch (const pursuit::RobotTrapped&) {
    }
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

Verdict complexity() {
  Verdict v;
  auto ratios = [](int base, double* plain, double* hash) {
    const double p1 = best_time(benchmark_scene(base, false), 7);
    const double p2 = best_time(benchmark_scene(2 * base, false), 7);
    const double h1 = best_time(benchmark_scene(base, true), 7);
    const double h2 = best_time(benchmark_scene(2 * base, true), 7);
    *plain = p2 / p1;
    *hash = h2 / h1;
    return fmt("n_o %g->%g: no hash x%.2f, hash x%.2f", base, 2 * base, *plain, *hash);
  };
  double rp, rh;
  v.note(ratios(200, &rp, &rh));
  v.require(rp <= 2.6, fmt("no hash: x%.2f", rp));
  v.require(rh <= 1.5, fmt("hash: x%.2f", rh));
  double rp2, rh2;
  v.note("informational " + ratios(400, &rp2, &rh2));
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> check;
  };
  const Criterion criteria[] = {
      {1, "branch count", branch_count},
      {2, "baseline run", baseline_run},
      {3, "figure regimes", figure_regimes},
      {4, "upper >= lower ordering", ordering_suite},
      {5, "refinement monotonicity", refinement_suite},
      {6, "analytic value", analytic_value},
      {7, "guaranteed capture time", capture},
      {8, "hash equivalence", hash_equivalence},
      {9, "complexity benchmark", complexity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failed += !v.pass;
    std::printf("%s %d %s: %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
