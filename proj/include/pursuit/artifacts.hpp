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

// Run artifacts: trajectory table, metadata document and SVG plot.

#ifndef PURSUIT_ARTIFACTS_HPP_
#define PURSUIT_ARTIFACTS_HPP_

#include <string>

#include "pursuit/engine.hpp"
#include "pursuit/scenario_io.hpp"

namespace pursuit {

// Header `t,x1,y1,x2,y2,distance`, one row per partition instant, numbers
// with 9 significant digits, '\n' line endings.
std::string trajectory_csv(const GameRecord& record);

// JSON with the scenario parameters, seed, final payoff and capture time
// (null when absent or infinite).
std::string metadata_json(const Scenario& scenario, const GameRecord& record);

// Self-contained SVG with both robot paths, obstacle path traces and the
// obstacle discs at the first and last instants. Plot bounds fit the
// trajectories with a 10% margin; coordinates are rounded to 1e-6.
std::string render_svg(const Scenario& scenario, const GameRecord& record,
                       const PlotStyle& style);

// Formats v with `digits` significant digits, locale independent.
std::string format_general(double v, int digits);

}  // namespace pursuit

#endif  // PURSUIT_ARTIFACTS_HPP_
