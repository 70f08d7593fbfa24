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

#include "cost.hpp"

namespace morrt {

double stage_cost(Point2 /*x*/, Point2 dx, int /*state*/, const CostParams& costs) {
  return costs.stage_weight * norm(dx);
}

double terminal_cost(Point2 x, int state, const CostParams& costs) {
  return costs.terminal_weight *
         squared_distance(x, costs.goal_nodes[static_cast<std::size_t>(state)]);
}

bool plan_structurally_equal(const PlanTree& a, const PlanTree& b) {
  if (a.num_agents != b.num_agents || a.num_observations != b.num_observations ||
      a.branches.size() != b.branches.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.branches.size(); ++i) {
    const PlanBranch& x = a.branches[i];
    const PlanBranch& y = b.branches[i];
    if (x.id != y.id || x.parent != y.parent || x.observation != y.observation ||
        x.ends_with_observation != y.ends_with_observation || x.obs_agent != y.obs_agent ||
        x.obs_area != y.obs_area || x.children != y.children ||
        x.v.weights != y.v.weights || x.waypoints != y.waypoints) {
      return false;
    }
  }
  return true;
}

double plan_expected_cost(const PlanTree& plan, const CostParams& costs) {
  const int num_states = static_cast<int>(costs.goal_nodes.size());
  double total = 0.0;
  for (int agent = 0; agent < plan.num_agents; ++agent) {
    for (const PlanBranch& branch : plan.branches) {
      const auto& wp = branch.waypoints[static_cast<std::size_t>(agent)];
      for (std::size_t l = 0; l + 1 < wp.size(); ++l) {
        const Point2 dx = wp[l + 1] - wp[l];
        for (int e = 0; e < num_states; ++e) {
          total += branch.v.weights[static_cast<std::size_t>(e)] * stage_cost(wp[l], dx, e, costs);
        }
      }
      if (!branch.ends_with_observation) {
        for (int e = 0; e < num_states; ++e) {
          total +=
              branch.v.weights[static_cast<std::size_t>(e)] * terminal_cost(wp.back(), e, costs);
        }
      }
    }
  }
  return total;
}

} // namespace morrt
