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

#include "scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace morrt {

namespace {

using json = nlohmann::ordered_json;

Point2 parse_point(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(what + " must be a [x, y] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Region parse_region(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("type")) {
    throw ValidationError(what + " must be an object with a \"type\" field");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "rect") {
    return Region::make_rect(parse_point(j.at("min"), what + ".min"),
                             parse_point(j.at("max"), what + ".max"));
  }
  if (type == "disk") {
    return Region::make_disk(parse_point(j.at("center"), what + ".center"),
                             j.at("radius").get<double>());
  }
  throw ValidationError(what + ": unknown region type \"" + type + "\"");
}

json region_to_json(const Region& r) {
  json j;
  if (r.kind == Region::Kind::rect) {
    j["type"] = "rect";
    j["min"] = {r.min.x, r.min.y};
    j["max"] = {r.max.x, r.max.y};
  } else {
    j["type"] = "disk";
    j["center"] = {r.center.x, r.center.y};
    j["radius"] = r.radius;
  }
  return j;
}

} // namespace

Scenario scenario_from_json_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(origin + ": not valid JSON: " + e.what());
  }

  Scenario s;
  try {
    s.name = j.value("name", std::string{});

    if (!j.contains("agents") || !j.at("agents").is_array() || j.at("agents").empty()) {
      throw ValidationError("\"agents\" must be a nonempty array");
    }
    for (std::size_t a = 0; a < j.at("agents").size(); ++a) {
      const json& ja = j.at("agents")[a];
      const std::string tag = "agents[" + std::to_string(a) + "]";
      AgentSpec agent;
      agent.start = parse_point(ja.at("start"), tag + ".start");
      agent.workspace.bounds = Region::make_rect(
          parse_point(ja.at("bounds").at("min"), tag + ".bounds.min"),
          parse_point(ja.at("bounds").at("max"), tag + ".bounds.max"));
      for (std::size_t i = 0; ja.contains("obstacles") && i < ja.at("obstacles").size(); ++i) {
        agent.workspace.obstacles.push_back(parse_region(
            ja.at("obstacles")[i], tag + ".obstacles[" + std::to_string(i) + "]"));
      }
      s.agents.push_back(std::move(agent));
    }

    const json& je = j.at("env");
    for (std::size_t i = 0; i < je.at("goal_nodes").size(); ++i) {
      s.env.goal_nodes.push_back(
          parse_point(je.at("goal_nodes")[i], "env.goal_nodes[" + std::to_string(i) + "]"));
    }
    s.env.num_states = static_cast<int>(s.env.goal_nodes.size());
    for (std::size_t i = 0; je.contains("observation_areas") && i < je.at("observation_areas").size(); ++i) {
      s.env.observation_areas.push_back(parse_region(
          je.at("observation_areas")[i], "env.observation_areas[" + std::to_string(i) + "]"));
    }
    s.env.accuracy = je.at("accuracy").get<double>();
    for (const json& p : je.at("initial_belief")) {
      s.initial_belief.probs.push_back(p.get<double>());
    }

    const json& jp = j.at("params");
    s.params.n_obs = jp.at("n_obs").get<int>();
    s.params.k = jp.at("k").get<int>();
    s.params.step = jp.at("step").get<double>();
    s.params.seed = jp.at("seed").get<std::uint64_t>();
    s.params.max_iterations = jp.value("max_iterations", 0L);

    const json& jc = j.at("costs");
    s.costs.stage_weight = jc.at("stage_weight").get<double>();
    s.costs.terminal_weight = jc.at("terminal_weight").get<double>();
    s.costs.goal_nodes = s.env.goal_nodes;
  } catch (const json::exception& e) {
    throw ValidationError(origin + ": schema error: " + e.what());
  }

  require_valid(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json_text(buf.str(), path);
}

std::string scenario_to_json_text(const Scenario& s) {
  json j;
  if (!s.name.empty()) j["name"] = s.name;
  j["agents"] = json::array();
  for (const AgentSpec& agent : s.agents) {
    json ja;
    ja["start"] = {agent.start.x, agent.start.y};
    ja["bounds"]["min"] = {agent.workspace.bounds.min.x, agent.workspace.bounds.min.y};
    ja["bounds"]["max"] = {agent.workspace.bounds.max.x, agent.workspace.bounds.max.y};
    ja["obstacles"] = json::array();
    for (const Region& r : agent.workspace.obstacles) ja["obstacles"].push_back(region_to_json(r));
    j["agents"].push_back(std::move(ja));
  }
  j["env"]["goal_nodes"] = json::array();
  for (Point2 g : s.env.goal_nodes) j["env"]["goal_nodes"].push_back({g.x, g.y});
  j["env"]["observation_areas"] = json::array();
  for (const Region& r : s.env.observation_areas) {
    j["env"]["observation_areas"].push_back(region_to_json(r));
  }
  j["env"]["accuracy"] = s.env.accuracy;
  j["env"]["initial_belief"] = s.initial_belief.probs;
  j["params"]["n_obs"] = s.params.n_obs;
  j["params"]["k"] = s.params.k;
  j["params"]["step"] = s.params.step;
  j["params"]["seed"] = s.params.seed;
  j["params"]["max_iterations"] = s.params.max_iterations;
  j["costs"]["stage_weight"] = s.costs.stage_weight;
  j["costs"]["terminal_weight"] = s.costs.terminal_weight;
  return j.dump(2) + "\n";
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scenario file: " + path);
  out << scenario_to_json_text(scenario);
  if (!out) throw IoError("failed while writing scenario file: " + path);
}

} // namespace morrt
