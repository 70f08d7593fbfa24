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

#ifndef MORRT_COST_HPP_
#define MORRT_COST_HPP_

#include <vector>

#include "environment.hpp"
#include "geometry.hpp"

namespace morrt {

/// Stage cost is stage_weight * |dx| (path length), terminal cost is
/// terminal_weight * squared distance to the goal node of the hypothesized
/// state. Both knobs live in scenario files; there are no hidden constants.
struct CostParams {
  double stage_weight = 1.0;
  double terminal_weight = 1.0;
  std::vector<Point2> goal_nodes; // one per environment state
};

double stage_cost(Point2 x, Point2 dx, int state, const CostParams& costs);
double terminal_cost(Point2 x, int state, const CostParams& costs);

/// One segment of a contingent plan. Branch 0 starts the mission; every other
/// branch starts right after the observation `observation` was made at its
/// parent's last waypoint. `waypoints[a]` holds agent a's positions for this
/// segment, first entry equal to the parent's last entry.
struct PlanBranch {
  int id = 0;
  int parent = -1;      // -1 for the root branch
  int observation = -1; // -1 for the root branch
  std::vector<std::vector<Point2>> waypoints;
  UnnormalizedBelief v;
  bool ends_with_observation = false;
  int obs_agent = -1; // agent whose endpoint makes the observation
  int obs_area = -1;  // area observed at the branch end
  std::vector<int> children; // one branch id per observation, empty for leaves
};

/// Contingent plan: a tree of branches where every observing branch has
/// exactly num_observations children (one per possible observation) and every
/// leaf ends the mission with a terminal cost.
struct PlanTree {
  int num_agents = 0;
  int num_observations = 0; // |O|, equal to the number of environment states
  std::vector<PlanBranch> branches;

  const PlanBranch& root() const { return branches.front(); }
};

bool plan_structurally_equal(const PlanTree& a, const PlanTree& b);

/// Branch-weighted expected mission cost: every branch contributes its stage
/// costs weighted by its unnormalized belief, and branches that do not end
/// with an observation contribute a belief-weighted terminal cost. Summed
/// over agents.
double plan_expected_cost(const PlanTree& plan, const CostParams& costs);

} // namespace morrt

#endif // MORRT_COST_HPP_
