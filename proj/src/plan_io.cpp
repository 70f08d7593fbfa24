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

#include "plan_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace morrt {

namespace {

using json = nlohmann::ordered_json;

json points_to_json(const std::vector<Point2>& points) {
  json j = json::array();
  for (Point2 p : points) j.push_back({p.x, p.y});
  return j;
}

std::vector<Point2> points_from_json(const json& j) {
  std::vector<Point2> points;
  for (const json& p : j) points.push_back({p[0].get<double>(), p[1].get<double>()});
  return points;
}

void validate_plan_structure(const PlanTree& plan) {
  if (plan.branches.empty()) throw ValidationError("plan has no branches");
  if (plan.num_agents < 1) throw ValidationError("plan needs at least one agent");
  if (plan.num_observations < 1) throw ValidationError("plan needs at least one observation label");
  for (std::size_t i = 0; i < plan.branches.size(); ++i) {
    const PlanBranch& b = plan.branches[i];
    const std::string tag = "branch " + std::to_string(i);
    if (b.id != static_cast<int>(i)) throw ValidationError(tag + ": ids must be dense and ordered");
    if (i == 0 && (b.parent != -1 || b.observation != -1)) {
      throw ValidationError("root branch cannot have a parent or an entry observation");
    }
    if (i > 0 && (b.parent < 0 || b.parent >= static_cast<int>(i))) {
      throw ValidationError(tag + ": parent must precede the branch");
    }
    if (i > 0 && (b.observation < 0 || b.observation >= plan.num_observations)) {
      throw ValidationError(tag + ": entry observation out of range");
    }
    if (static_cast<int>(b.waypoints.size()) != plan.num_agents) {
      throw ValidationError(tag + ": waypoint lists must match the agent count");
    }
    for (const auto& wp : b.waypoints) {
      if (wp.empty()) throw ValidationError(tag + ": waypoint lists cannot be empty");
      for (Point2 p : wp) {
        if (!is_finite(p)) throw ValidationError(tag + ": waypoints must be finite");
      }
    }
    if (b.ends_with_observation) {
      if (static_cast<int>(b.children.size()) != plan.num_observations) {
        throw ValidationError(tag + ": observing branches need one child per observation");
      }
      for (int o = 0; o < plan.num_observations; ++o) {
        const int child = b.children[static_cast<std::size_t>(o)];
        if (child <= static_cast<int>(i) || child >= static_cast<int>(plan.branches.size())) {
          throw ValidationError(tag + ": child branch index out of range");
        }
        const PlanBranch& cb = plan.branches[static_cast<std::size_t>(child)];
        if (cb.parent != static_cast<int>(i) || cb.observation != o) {
          throw ValidationError(tag + ": child links are inconsistent");
        }
        for (int a = 0; a < plan.num_agents; ++a) {
          if (!(cb.waypoints[static_cast<std::size_t>(a)].front() ==
                b.waypoints[static_cast<std::size_t>(a)].back())) {
            throw ValidationError(tag + ": child branches must start at the parent's end");
          }
        }
      }
    } else if (!b.children.empty()) {
      throw ValidationError(tag + ": only observing branches may have children");
    }
  }
}

} // namespace

std::string plan_to_json_text(const PlanFile& file) {
  json j;
  j["format"] = "morrt-plan";
  j["version"] = 1;
  if (!file.scenario_name.empty()) j["scenario"] = file.scenario_name;
  j["seed"] = file.seed;
  j["expected_cost"] = file.expected_cost;
  j["num_agents"] = file.plan.num_agents;
  j["num_observations"] = file.plan.num_observations;
  j["branches"] = json::array();
  for (const PlanBranch& b : file.plan.branches) {
    json jb;
    jb["id"] = b.id;
    jb["parent"] = b.parent;
    jb["observation"] = b.observation;
    jb["ends_with_observation"] = b.ends_with_observation;
    jb["obs_agent"] = b.obs_agent;
    jb["obs_area"] = b.obs_area;
    jb["children"] = b.children;
    jb["v"] = b.v.weights;
    jb["waypoints"] = json::array();
    for (const auto& wp : b.waypoints) jb["waypoints"].push_back(points_to_json(wp));
    j["branches"].push_back(std::move(jb));
  }
  return j.dump(2) + "\n";
}

void save_plan(const PlanFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write plan file: " + path);
  out << plan_to_json_text(file);
  if (!out) throw IoError("failed while writing plan file: " + path);
}

PlanFile plan_from_json_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(origin + ": not valid JSON: " + e.what());
  }

  PlanFile file;
  try {
    if (j.value("format", std::string{}) != "morrt-plan") {
      throw ValidationError(origin + ": not a morrt plan file");
    }
    file.seed = j.at("seed").get<std::uint64_t>();
    file.expected_cost = j.at("expected_cost").get<double>();
    file.scenario_name = j.value("scenario", std::string{});
    file.plan.num_agents = j.at("num_agents").get<int>();
    file.plan.num_observations = j.at("num_observations").get<int>();
    for (const json& jb : j.at("branches")) {
      PlanBranch b;
      b.id = jb.at("id").get<int>();
      b.parent = jb.at("parent").get<int>();
      b.observation = jb.at("observation").get<int>();
      b.ends_with_observation = jb.at("ends_with_observation").get<bool>();
      b.obs_agent = jb.at("obs_agent").get<int>();
      b.obs_area = jb.at("obs_area").get<int>();
      b.children = jb.at("children").get<std::vector<int>>();
      b.v.weights = jb.at("v").get<std::vector<double>>();
      for (const json& wp : jb.at("waypoints")) b.waypoints.push_back(points_from_json(wp));
      file.plan.branches.push_back(std::move(b));
    }
  } catch (const json::exception& e) {
    throw ValidationError(origin + ": schema error: " + e.what());
  }

  validate_plan_structure(file.plan);
  return file;
}

PlanFile load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open plan file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return plan_from_json_text(buf.str(), path);
}

std::string traces_to_json_text(const std::vector<MissionTrace>& traces) {
  json j;
  j["format"] = "morrt-traces";
  j["version"] = 1;
  j["runs"] = json::array();
  for (const MissionTrace& t : traces) {
    json jt;
    jt["true_state"] = t.true_state;
    jt["observations"] = t.observations;
    jt["branch_ids"] = t.branch_ids;
    jt["realized_cost"] = t.realized_cost;
    jt["visited"] = json::array();
    for (const auto& wp : t.visited) jt["visited"].push_back(points_to_json(wp));
    j["runs"].push_back(std::move(jt));
  }
  return j.dump(2) + "\n";
}

void save_traces(const std::vector<MissionTrace>& traces, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write trace file: " + path);
  out << traces_to_json_text(traces);
  if (!out) throw IoError("failed while writing trace file: " + path);
}

} // namespace morrt
