// Copyright 2026 The morrt Authors
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

#include "svg_render.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace morrt {

namespace {

constexpr double kScale = 60.0;  // pixels per meter
constexpr double kMargin = 30.0; // pixels
constexpr double kLegendWidth = 170.0;

const char* const kPalette[] = {
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a",
};
constexpr int kPaletteSize = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Mapper {
  double min_x, min_y, max_y;
  double sx(double x) const { return kMargin + (x - min_x) * kScale; }
  double sy(double y) const { return kMargin + (max_y - y) * kScale; } // y grows upward in world
};

void emit_region(std::ostringstream& out, const Region& r, const Mapper& m,
                 const std::string& fill, const std::string& extra) {
  if (r.kind == Region::Kind::rect) {
    out << "  <rect x=\"" << fmt(m.sx(r.min.x)) << "\" y=\"" << fmt(m.sy(r.max.y)) << "\" width=\""
        << fmt((r.max.x - r.min.x) * kScale) << "\" height=\"" << fmt((r.max.y - r.min.y) * kScale)
        << "\" fill=\"" << fill << "\"" << extra << "/>\n";
  } else {
    out << "  <circle cx=\"" << fmt(m.sx(r.center.x)) << "\" cy=\"" << fmt(m.sy(r.center.y))
        << "\" r=\"" << fmt(r.radius * kScale) << "\" fill=\"" << fill << "\"" << extra << "/>\n";
  }
}

std::string observation_vector_label(const PlanTree& plan, int branch_id) {
  std::vector<int> obs;
  for (int i = branch_id; i >= 0; i = plan.branches[static_cast<std::size_t>(i)].parent) {
    if (plan.branches[static_cast<std::size_t>(i)].observation >= 0) {
      obs.push_back(plan.branches[static_cast<std::size_t>(i)].observation);
    }
  }
  std::reverse(obs.begin(), obs.end());
  std::string label = "[";
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (i > 0) label += ",";
    label += std::to_string(obs[i]);
  }
  return label + "]";
}

} // namespace

std::string render_svg_text(const PlanTree& plan, const Scenario& scenario) {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
  bool first = true;
  for (const AgentSpec& agent : scenario.agents) {
    const Region& b = agent.workspace.bounds;
    if (first) {
      min_x = b.min.x;
      min_y = b.min.y;
      max_x = b.max.x;
      max_y = b.max.y;
      first = false;
    } else {
      min_x = std::min(min_x, b.min.x);
      min_y = std::min(min_y, b.min.y);
      max_x = std::max(max_x, b.max.x);
      max_y = std::max(max_y, b.max.y);
    }
  }
  const Mapper m{min_x, min_y, max_y};
  const double world_w = (max_x - min_x) * kScale;
  const double world_h = (max_y - min_y) * kScale;
  const double width = world_w + 2 * kMargin + kLegendWidth;
  const double height = std::max(world_h + 2 * kMargin,
                                 40.0 + 18.0 * static_cast<double>(plan.branches.size()));

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" fill=\"white\"/>\n";
  out << "  <rect x=\"" << fmt(m.sx(min_x)) << "\" y=\"" << fmt(m.sy(max_y)) << "\" width=\""
      << fmt(world_w) << "\" height=\"" << fmt(world_h)
      << "\" fill=\"#fafafa\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  for (const Region& area : scenario.env.observation_areas) {
    emit_region(out, area, m, "#9ecbff", " fill-opacity=\"0.65\"");
  }
  for (const AgentSpec& agent : scenario.agents) {
    for (const Region& obstacle : agent.workspace.obstacles) {
      emit_region(out, obstacle, m, "#3a3a3a", " fill-opacity=\"0.85\"");
    }
  }
  const double goal_px = 0.22 * kScale;
  for (Point2 g : scenario.env.goal_nodes) {
    out << "  <rect x=\"" << fmt(m.sx(g.x) - goal_px / 2) << "\" y=\""
        << fmt(m.sy(g.y) - goal_px / 2) << "\" width=\"" << fmt(goal_px) << "\" height=\""
        << fmt(goal_px) << "\" fill=\"#ffd700\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }

  for (const PlanBranch& branch : plan.branches) {
    const char* color = kPalette[branch.id % kPaletteSize];
    for (std::size_t a = 0; a < branch.waypoints.size(); ++a) {
      out << "  <polyline class=\"branch\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\"";
      if (a > 0) out << " stroke-dasharray=\"6 3\"";
      out << " points=\"";
      for (std::size_t l = 0; l < branch.waypoints[a].size(); ++l) {
        if (l > 0) out << " ";
        out << fmt(m.sx(branch.waypoints[a][l].x)) << "," << fmt(m.sy(branch.waypoints[a][l].y));
      }
      out << "\"/>\n";
    }
    if (branch.ends_with_observation) {
      const auto& end = branch.waypoints[static_cast<std::size_t>(branch.obs_agent)].back();
      out << "  <circle cx=\"" << fmt(m.sx(end.x)) << "\" cy=\"" << fmt(m.sy(end.y))
          << "\" r=\"4\" fill=\"black\"/>\n";
    }
  }
  for (const AgentSpec& agent : scenario.agents) {
    out << "  <circle cx=\"" << fmt(m.sx(agent.start.x)) << "\" cy=\"" << fmt(m.sy(agent.start.y))
        << "\" r=\"5\" fill=\"none\" stroke=\"#c40000\" stroke-width=\"2\"/>\n";
  }

  const double legend_x = world_w + 2 * kMargin;
  out << "  <text x=\"" << fmt(legend_x) << "\" y=\"24\" font-family=\"sans-serif\""
      << " font-size=\"13\">branches</text>\n";
  for (const PlanBranch& branch : plan.branches) {
    const double y = 44.0 + 18.0 * static_cast<double>(branch.id);
    out << "  <line x1=\"" << fmt(legend_x) << "\" y1=\"" << fmt(y - 4) << "\" x2=\""
        << fmt(legend_x + 24) << "\" y2=\"" << fmt(y - 4) << "\" stroke=\""
        << kPalette[branch.id % kPaletteSize] << "\" stroke-width=\"3\"/>\n";
    out << "  <text x=\"" << fmt(legend_x + 30) << "\" y=\"" << fmt(y)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << branch.id << ": o="
        << observation_vector_label(plan, branch.id) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void render_svg(const PlanTree& plan, const Scenario& scenario, const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write svg file: " + out_path);
  out << render_svg_text(plan, scenario);
  if (!out) throw IoError("failed while writing svg file: " + out_path);
}

} // namespace morrt
