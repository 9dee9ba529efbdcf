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

#include "pursuit/artifacts.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace pursuit {

namespace {

std::string format_fixed6(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed, 6);
  return std::string(buf.data(), res.ptr);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

nlohmann::ordered_json finite_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::ordered_json point_json(const Point2d& p) {
  return nlohmann::ordered_json::array({p.x(), p.y()});
}

// World-to-image transform fitted to the trajectories.
class Viewport {
 public:
  Viewport(const GameRecord& record, int width, int height)
      : width_(width), height_(height) {
    Point2d lo = record.pursuer_path.front();
    Point2d hi = lo;
    for (const auto* path : {&record.pursuer_path, &record.evader_path}) {
      for (const Point2d& p : *path) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
      }
    }
    Point2d span = hi - lo;
    for (int i = 0; i < 2; ++i) {
      if (span[i] <= 0.0) span[i] = 1.0;
    }
    lo -= 0.1 * span;
    span *= 1.2;
    scale_ = std::min(width / span.x(), height / span.y());
    // Center the fitted box in the image.
    offset_ = Point2d(0.5 * (width - scale_ * span.x()),
                      0.5 * (height - scale_ * span.y()));
    lo_ = lo;
  }

  Point2d map(const Point2d& p) const {
    return {offset_.x() + scale_ * (p.x() - lo_.x()),
            height_ - (offset_.y() + scale_ * (p.y() - lo_.y()))};
  }
  double scale() const { return scale_; }
  int width() const { return width_; }
  int height() const { return height_; }

 private:
  int width_;
  int height_;
  double scale_ = 1.0;
  Point2d offset_;
  Point2d lo_;
};

std::string polyline(const Viewport& view, const std::vector<Point2d>& path,
                     const std::string& color, double width,
                     const std::string& extra = "") {
  std::ostringstream out;
  out << "<polyline fill=\"none\" stroke=\"" << xml_escape(color)
      << "\" stroke-width=\"" << format_fixed6(width) << "\"" << extra
      << " points=\"";
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Point2d q = view.map(path[i]);
    out << (i ? " " : "") << format_fixed6(q.x()) << "," << format_fixed6(q.y());
  }
  out << "\"/>\n";
  return out.str();
}

std::string circle(const Viewport& view, const Point2d& center, double radius,
                   const std::string& attrs) {
  const Point2d q = view.map(center);
  std::ostringstream out;
  out << "<circle cx=\"" << format_fixed6(q.x()) << "\" cy=\""
      << format_fixed6(q.y()) << "\" r=\"" << format_fixed6(radius) << "\" "
      << attrs << "/>\n";
  return out.str();
}

}  // namespace

std::string format_general(double v, int digits) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, digits);
  return std::string(buf.data(), res.ptr);
}

std::string trajectory_csv(const GameRecord& record) {
  std::string out = "t,x1,y1,x2,y2,distance\n";
  for (std::size_t k = 0; k < record.times.size(); ++k) {
    const Point2d& p = record.pursuer_path[k];
    const Point2d& e = record.evader_path[k];
    for (double v : {record.times[k], p.x(), p.y(), e.x(), e.y()}) {
      out += format_general(v, 9);
      out += ',';
    }
    out += format_general(distance(p, e), 9);
    out += '\n';
  }
  return out;
}

std::string metadata_json(const Scenario& s, const GameRecord& record) {
  nlohmann::ordered_json params;
  params["pursuer_start"] = point_json(s.pursuer_start);
  params["evader_start"] = point_json(s.evader_start);
  params["pursuer_speed"] = s.pursuer_speed;
  params["evader_speed"] = s.evader_speed;
  params["T"] = s.horizon;
  params["dt"] = s.time_step;
  params["delta_alpha"] = s.delta_alpha;
  params["payoff"] = payoff_name(s.payoff.type());
  if (s.payoff.type() == PayoffKind::Type::kCaptureTime) {
    params["alpha"] = s.payoff.alpha();
  }
  params["obstacles"] = s.obstacles.tracks.size();
  params["use_spatial_hash"] = s.use_spatial_hash;

  std::size_t pursuer_pruned = 0;
  std::size_t evader_pruned = 0;
  for (const auto& [p, e] : record.pruned_branch_counts) {
    pursuer_pruned += p;
    evader_pruned += e;
  }

  nlohmann::ordered_json doc;
  doc["name"] = s.name;
  doc["parameters"] = params;
  doc["seed"] = s.seed;
  doc["steps"] = record.steps();
  doc["initial_distance"] =
      distance(record.pursuer_path.front(), record.evader_path.front());
  doc["final_distance"] =
      distance(record.pursuer_path.back(), record.evader_path.back());
  doc["final_payoff"] = finite_or_null(record.final_payoff);
  doc["capture_time"] =
      record.capture_time ? finite_or_null(*record.capture_time) : nullptr;
  doc["pruned_branches"] = {{"pursuer", pursuer_pruned},
                            {"evader", evader_pruned}};
  return doc.dump(2) + "\n";
}

std::string render_svg(const Scenario& scenario, const GameRecord& record,
                       const PlotStyle& style) {
  const Viewport view(record, style.width, style.height);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width
      << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width
      << " " << style.height << "\">\n"
      << "<title>" << xml_escape(scenario.name) << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\""
      << style.height << "\" fill=\"" << xml_escape(style.background)
      << "\"/>\n";

  const std::string obstacle = xml_escape(style.obstacle_color);
  for (const ObstacleTrack& track : scenario.obstacles.tracks) {
    std::vector<Point2d> centers;
    centers.reserve(record.times.size());
    for (double t : record.times) centers.push_back(obstacle_center(track, t));
    out << polyline(view, centers, style.obstacle_color, 1.0,
                    " stroke-dasharray=\"4,3\"");
    const double r = track.radius() * view.scale();
    out << circle(view, centers.front(), r,
                  "fill=\"none\" stroke=\"" + obstacle + "\" stroke-width=\"1\"");
    out << circle(view, centers.back(), r,
                  "fill=\"" + obstacle + "\" fill-opacity=\"0.35\" stroke=\"" +
                      obstacle + "\" stroke-width=\"1\"");
  }

  const std::string pursuer = xml_escape(style.pursuer_color);
  const std::string evader = xml_escape(style.evader_color);
  out << polyline(view, record.pursuer_path, style.pursuer_color, 2.0);
  out << polyline(view, record.evader_path, style.evader_color, 2.0);
  out << circle(view, record.pursuer_path.front(), 4.0, "fill=\"" + pursuer + "\"");
  out << circle(view, record.evader_path.front(), 4.0, "fill=\"" + evader + "\"");
  out << circle(view, record.pursuer_path.back(), 4.0,
                "fill=\"none\" stroke=\"" + pursuer + "\" stroke-width=\"2\"");
  out << circle(view, record.evader_path.back(), 4.0,
                "fill=\"none\" stroke=\"" + evader + "\" stroke-width=\"2\"");
  out << "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" "
         "fill=\""
      << pursuer << "\">pursuer</text>\n"
      << "<text x=\"10\" y=\"38\" font-family=\"sans-serif\" font-size=\"14\" "
         "fill=\""
      << evader << "\">evader</text>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace pursuit
