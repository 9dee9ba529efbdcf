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

#include "pursuit/scenario_io.hpp"

#include <yaml-cpp/yaml.h>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pursuit {

namespace {

ParseError error_at(const YAML::Mark& mark, const std::string& message) {
  if (mark.is_null()) return ParseError(message, 1, 1);
  return ParseError(message, mark.line + 1, mark.column + 1);
}

template <typename T>
T scalar_as(const YAML::Node& node, const std::string& key, const char* what) {
  if (!node.IsScalar()) throw error_at(node.Mark(), key + ": expected " + what);
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw error_at(node.Mark(), key + ": expected " + what);
  }
}

double as_real(const YAML::Node& node, const std::string& key) {
  const double v = scalar_as<double>(node, key, "a number");
  if (!std::isfinite(v)) throw error_at(node.Mark(), key + ": not finite");
  return v;
}

Point2d as_point(const YAML::Node& node, const std::string& key) {
  if (!node.IsSequence() || node.size() != 2) {
    throw error_at(node.Mark(), key + ": expected [x, y]");
  }
  return {as_real(node[0], key), as_real(node[1], key)};
}

// Checks the keys of a mapping node against `allowed` and returns a
// key -> value lookup preserving marks.
std::map<std::string, YAML::Node> mapping(const YAML::Node& node,
                                          const std::set<std::string>& allowed,
                                          const std::string& context) {
  if (!node.IsMap()) throw error_at(node.Mark(), context + ": expected a mapping");
  std::map<std::string, YAML::Node> out;
  for (const auto& kv : node) {
    const std::string key = scalar_as<std::string>(kv.first, context, "a key");
    if (!allowed.contains(key)) {
      throw error_at(kv.first.Mark(), "unknown key '" + key + "' in " + context);
    }
    if (out.contains(key)) {
      throw error_at(kv.first.Mark(), "duplicate key '" + key + "'");
    }
    out.emplace(key, kv.second);
  }
  return out;
}

const YAML::Node& required(const std::map<std::string, YAML::Node>& fields,
                           const std::string& key, const YAML::Mark& where,
                           const std::string& context) {
  const auto it = fields.find(key);
  if (it == fields.end()) {
    throw error_at(where, "missing required field '" + key + "' in " + context);
  }
  return it->second;
}

ObstacleTrack parse_obstacle(const YAML::Node& node, std::size_t index,
                             std::uint64_t scenario_seed) {
  const std::string ctx = "obstacles[" + std::to_string(index) + "]";
  const auto f = mapping(node,
                         {"radius", "motion", "center", "start", "velocity",
                          "bounds", "speed", "seed"},
                         ctx);
  const double radius = as_real(required(f, "radius", node.Mark(), ctx), ctx + ".radius");
  const std::string motion = scalar_as<std::string>(
      required(f, "motion", node.Mark(), ctx), ctx + ".motion", "a string");

  std::set<std::string> used{"radius", "motion"};
  ObstacleMotion m;
  if (motion == "static") {
    m = StaticMotion{as_point(required(f, "center", node.Mark(), ctx), ctx + ".center")};
    used.insert("center");
  } else if (motion == "linear") {
    m = LinearMotion{
        as_point(required(f, "start", node.Mark(), ctx), ctx + ".start"),
        as_point(required(f, "velocity", node.Mark(), ctx), ctx + ".velocity")};
    used.insert({"start", "velocity"});
  } else if (motion == "random_waypoint") {
    const YAML::Node& b = required(f, "bounds", node.Mark(), ctx);
    if (!b.IsSequence() || b.size() != 4) {
      throw error_at(b.Mark(), ctx + ".bounds: expected [xmin, ymin, xmax, ymax]");
    }
    RandomWaypointMotion w;
    w.bounds = {{as_real(b[0], ctx + ".bounds"), as_real(b[1], ctx + ".bounds")},
                {as_real(b[2], ctx + ".bounds"), as_real(b[3], ctx + ".bounds")}};
    w.speed = as_real(required(f, "speed", node.Mark(), ctx), ctx + ".speed");
    w.seed = f.contains("seed")
                 ? scalar_as<std::uint64_t>(f.at("seed"), ctx + ".seed",
                                            "an unsigned integer")
                 : derive_obstacle_seed(scenario_seed, index);
    m = w;
    used.insert({"bounds", "speed", "seed"});
  } else {
    throw error_at(f.at("motion").Mark(),
                   ctx + ".motion: expected static, linear or random_waypoint");
  }
  for (const auto& [key, value] : f) {
    if (!used.contains(key)) {
      throw error_at(value.Mark(), ctx + ": key '" + key +
                                       "' does not apply to motion " + motion);
    }
  }
  try {
    return ObstacleTrack(radius, m);
  } catch (const InvalidParameter& e) {
    throw error_at(node.Mark(), ctx + ": " + e.what());
  }
}

PlotStyle parse_style(const YAML::Node& node) {
  const auto f = mapping(node,
                         {"width", "height", "background", "pursuer_color",
                          "evader_color", "obstacle_color"},
                         "output");
  PlotStyle style;
  const auto size = [&](const char* key, int& out) {
    if (!f.contains(key)) return;
    out = scalar_as<int>(f.at(key), std::string("output.") + key, "an integer");
    if (out < 16 || out > 16384) {
      throw error_at(f.at(key).Mark(),
                     std::string("output.") + key + ": must lie in [16, 16384]");
    }
  };
  const auto color = [&](const char* key, std::string& out) {
    if (f.contains(key)) {
      out = scalar_as<std::string>(f.at(key), std::string("output.") + key,
                                   "a color string");
    }
  };
  size("width", style.width);
  size("height", style.height);
  color("background", style.background);
  color("pursuer_color", style.pursuer_color);
  color("evader_color", style.evader_color);
  color("obstacle_color", style.obstacle_color);
  return style;
}

std::string fmt_real(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string fmt_point(const Point2d& p) {
  return "[" + fmt_real(p.x()) + ", " + fmt_real(p.y()) + "]";
}

}  // namespace

ScenarioFile parse_scenario(const std::string& text,
                            const std::string& default_name, ScenarioUse use) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw error_at(e.mark, e.msg);
  }
  if (!root.IsMap()) throw ParseError("scenario must be a YAML mapping", 1, 1);

  const auto f = mapping(
      root,
      {"name", "pursuer_start", "evader_start", "pursuer_speed", "evader_speed",
       "T", "dt", "delta_alpha", "payoff", "alpha", "seed", "use_spatial_hash",
       "hash_cell_size", "obstacles", "output"},
      "scenario");
  const YAML::Mark top = root.Mark();
  const std::string ctx = "scenario";

  ScenarioFile file;
  Scenario& s = file.scenario;
  s.name = f.contains("name")
               ? scalar_as<std::string>(f.at("name"), "name", "a string")
               : default_name;
  s.pursuer_start = as_point(required(f, "pursuer_start", top, ctx), "pursuer_start");
  s.evader_start = as_point(required(f, "evader_start", top, ctx), "evader_start");
  s.pursuer_speed = as_real(required(f, "pursuer_speed", top, ctx), "pursuer_speed");
  s.evader_speed = as_real(required(f, "evader_speed", top, ctx), "evader_speed");
  s.horizon = as_real(required(f, "T", top, ctx), "T");
  s.time_step = as_real(required(f, "dt", top, ctx), "dt");
  s.delta_alpha = as_real(required(f, "delta_alpha", top, ctx), "delta_alpha");

  const YAML::Node& payoff = required(f, "payoff", top, ctx);
  const std::string kind = scalar_as<std::string>(payoff, "payoff", "a string");
  if (kind == "capture_time") {
    const YAML::Node& alpha = required(f, "alpha", top, ctx);
    try {
      s.payoff = PayoffKind::capture_time(as_real(alpha, "alpha"));
    } catch (const InvalidParameter& e) {
      throw error_at(alpha.Mark(), std::string("alpha: ") + e.what());
    }
  } else if (kind == "terminal" || kind == "min_over_time") {
    if (f.contains("alpha")) {
      throw error_at(f.at("alpha").Mark(),
                     "alpha: only valid with payoff capture_time");
    }
    s.payoff = kind == "terminal" ? PayoffKind::terminal()
                                  : PayoffKind::min_over_time();
  } else {
    throw error_at(payoff.Mark(),
                   "payoff: expected terminal, min_over_time or capture_time");
  }

  if (f.contains("seed")) {
    s.seed = scalar_as<std::uint64_t>(f.at("seed"), "seed", "an unsigned integer");
  }
  if (f.contains("use_spatial_hash")) {
    s.use_spatial_hash =
        scalar_as<bool>(f.at("use_spatial_hash"), "use_spatial_hash", "true or false");
  }
  if (f.contains("hash_cell_size")) {
    s.hash_cell_size = as_real(f.at("hash_cell_size"), "hash_cell_size");
    if (s.hash_cell_size < 0.0) {
      throw error_at(f.at("hash_cell_size").Mark(),
                     "hash_cell_size: must be >= 0 (0 selects the default)");
    }
  }
  if (f.contains("obstacles")) {
    const YAML::Node& list = f.at("obstacles");
    if (!list.IsSequence()) {
      throw error_at(list.Mark(), "obstacles: expected a list");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      s.obstacles.tracks.push_back(parse_obstacle(list[i], i, s.seed));
    }
  }
  if (f.contains("output")) file.style = parse_style(f.at("output"));

  try {
    validate(s, use);
  } catch (const ScenarioError& e) {
    const std::string& first = e.problems().front();
    const std::string field = first.substr(0, first.find(':'));
    const auto it = f.find(field);
    throw error_at(it != f.end() ? it->second.Mark() : top, e.what());
  }
  return file;
}

ScenarioFile load_scenario_file(const std::filesystem::path& path,
                                ScenarioUse use) {
  return parse_scenario(read_text_file(path), path.stem().string(), use);
}

std::string dump_scenario(const ScenarioFile& file) {
  const Scenario& s = file.scenario;
  std::ostringstream out;
  out << "name: " << quoted(s.name) << "\n";
  out << "pursuer_start: " << fmt_point(s.pursuer_start) << "\n";
  out << "evader_start: " << fmt_point(s.evader_start) << "\n";
  out << "pursuer_speed: " << fmt_real(s.pursuer_speed) << "\n";
  out << "evader_speed: " << fmt_real(s.evader_speed) << "\n";
  out << "T: " << fmt_real(s.horizon) << "\n";
  out << "dt: " << fmt_real(s.time_step) << "\n";
  out << "delta_alpha: " << fmt_real(s.delta_alpha) << "\n";
  out << "payoff: " << payoff_name(s.payoff.type()) << "\n";
  if (s.payoff.type() == PayoffKind::Type::kCaptureTime) {
    out << "alpha: " << fmt_real(s.payoff.alpha()) << "\n";
  }
  out << "seed: " << s.seed << "\n";
  out << "use_spatial_hash: " << (s.use_spatial_hash ? "true" : "false") << "\n";
  out << "hash_cell_size: " << fmt_real(s.hash_cell_size) << "\n";
  if (s.obstacles.tracks.empty()) {
    out << "obstacles: []\n";
  } else {
    out << "obstacles:\n";
  }
  for (const ObstacleTrack& track : s.obstacles.tracks) {
    out << "  - {radius: " << fmt_real(track.radius());
    if (const auto* st = std::get_if<StaticMotion>(&track.motion())) {
      out << ", motion: static, center: " << fmt_point(st->center);
    } else if (const auto* l = std::get_if<LinearMotion>(&track.motion())) {
      out << ", motion: linear, start: " << fmt_point(l->start)
          << ", velocity: " << fmt_point(l->velocity);
    } else {
      const auto& w = std::get<RandomWaypointMotion>(track.motion());
      out << ", motion: random_waypoint, bounds: [" << fmt_real(w.bounds.min.x())
          << ", " << fmt_real(w.bounds.min.y()) << ", "
          << fmt_real(w.bounds.max.x()) << ", " << fmt_real(w.bounds.max.y())
          << "], speed: " << fmt_real(w.speed) << ", seed: " << w.seed;
    }
    out << "}\n";
  }
  const PlotStyle& st = file.style;
  out << "output:\n"
      << "  width: " << st.width << "\n"
      << "  height: " << st.height << "\n"
      << "  background: " << quoted(st.background) << "\n"
      << "  pursuer_color: " << quoted(st.pursuer_color) << "\n"
      << "  evader_color: " << quoted(st.evader_color) << "\n"
      << "  obstacle_color: " << quoted(st.obstacle_color) << "\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return buf.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace pursuit
