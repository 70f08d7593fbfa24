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

#include "scenario.hpp"

#include <cmath>

#include "errors.hpp"

namespace morrt {

namespace {

bool region_well_formed(const Region& r, std::string& why) {
  if (r.kind == Region::Kind::rect) {
    if (!is_finite(r.min) || !is_finite(r.max)) {
      why = "rectangle has non-finite corners";
      return false;
    }
    if (!(r.min.x < r.max.x && r.min.y < r.max.y)) {
      why = "rectangle min corner must be strictly below max corner";
      return false;
    }
  } else {
    if (!is_finite(r.center) || !std::isfinite(r.radius)) {
      why = "disk has non-finite parameters";
      return false;
    }
    if (!(r.radius > 0.0)) {
      why = "disk radius must be positive";
      return false;
    }
  }
  return true;
}

} // namespace

std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> issues;
  auto add = [&issues](const std::string& msg) { issues.push_back(msg); };

  if (s.agents.empty()) add("scenario needs at least one agent");

  const int g = s.env.num_states;
  if (g < 1) add("environment needs at least one state");
  if (static_cast<int>(s.env.goal_nodes.size()) != g) {
    add("goal_nodes count must equal the number of environment states");
  }
  for (Point2 goal : s.env.goal_nodes) {
    if (!is_finite(goal)) add("goal node coordinates must be finite");
  }
  if (!(s.env.accuracy >= 0.0 && s.env.accuracy <= 1.0)) {
    add("observation accuracy must lie in [0, 1]");
  }

  if (static_cast<int>(s.initial_belief.probs.size()) != g) {
    add("initial belief length must equal the number of environment states");
  } else {
    double sum = 0.0;
    bool nonneg = true;
    for (double p : s.initial_belief.probs) {
      sum += p;
      nonneg = nonneg && p >= 0.0;
    }
    if (!nonneg) add("initial belief entries must be nonnegative");
    if (std::abs(sum - 1.0) > 1e-9) add("belief must sum to 1");
  }

  std::string why;
  for (std::size_t i = 0; i < s.env.observation_areas.size(); ++i) {
    if (!region_well_formed(s.env.observation_areas[i], why)) {
      add("observation area " + std::to_string(i) + ": " + why);
    }
  }
  for (std::size_t i = 0; i < s.env.observation_areas.size(); ++i) {
    for (std::size_t j = i + 1; j < s.env.observation_areas.size(); ++j) {
      if (regions_intersect(s.env.observation_areas[i], s.env.observation_areas[j])) {
        add("observation areas must be disjoint (areas " + std::to_string(i) + " and " +
            std::to_string(j) + " overlap)");
      }
    }
  }

  for (std::size_t a = 0; a < s.agents.size(); ++a) {
    const AgentSpec& agent = s.agents[a];
    const std::string tag = "agent " + std::to_string(a) + ": ";
    if (agent.workspace.bounds.kind != Region::Kind::rect ||
        !region_well_formed(agent.workspace.bounds, why)) {
      add(tag + "workspace bounds must be a nonempty rectangle");
      continue;
    }
    for (std::size_t i = 0; i < agent.workspace.obstacles.size(); ++i) {
      const Region& obs = agent.workspace.obstacles[i];
      if (!region_well_formed(obs, why)) {
        add(tag + "obstacle " + std::to_string(i) + ": " + why);
      } else if (!regions_intersect(obs, agent.workspace.bounds)) {
        add(tag + "obstacle " + std::to_string(i) + " lies outside the workspace bounds");
      }
    }
    if (!is_finite(agent.start)) {
      add(tag + "start must be finite");
    } else if (!point_in_region(agent.start, agent.workspace.bounds)) {
      add(tag + "start must lie inside the workspace bounds");
    } else if (segment_collides(agent.start, agent.start, agent.workspace.obstacles)) {
      add(tag + "start lies inside an obstacle");
    }
  }

  if (s.params.n_obs < 1) add("params.n_obs must be at least 1");
  if (s.params.k < 1) add("params.k must be at least 1");
  if (!(s.params.step > 0.0) || !std::isfinite(s.params.step)) {
    add("params.step must be positive");
  }

  if (!(s.costs.stage_weight >= 0.0) || !(s.costs.terminal_weight >= 0.0)) {
    add("cost weights must be nonnegative");
  } else if (s.costs.stage_weight == 0.0 && s.costs.terminal_weight == 0.0) {
    add("at least one cost weight must be positive");
  }
  if (s.costs.goal_nodes != s.env.goal_nodes) {
    add("cost goal nodes must mirror the environment goal nodes");
  }

  return issues;
}

void require_valid(const Scenario& scenario) {
  const std::vector<std::string> issues = validate_scenario(scenario);
  if (issues.empty()) return;
  std::string msg = "invalid scenario";
  if (!scenario.name.empty()) msg += " '" + scenario.name + "'";
  for (const std::string& issue : issues) msg += "\n  - " + issue;
  throw ValidationError(msg);
}

} // namespace morrt
