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

#ifndef MORRT_RRT_HPP_
#define MORRT_RRT_HPP_

#include <cstdint>
#include <vector>

#include "cost.hpp"
#include "environment.hpp"
#include "geometry.hpp"
#include "rng.hpp"

namespace morrt {

struct TreeNode {
  Point2 pos;
  int parent = -1;
  int depth_edges = 0;
  int observed_area = -1; // area index when this node records an observation
  bool path_has_observation = false;
};

/// One agent's tree for a single expansion phase. Node 0 is the start; every
/// edge is at most `step` long and collision-free in the owning agent's
/// workspace. At most one node per root-to-node path records an observation.
struct AgentTree {
  std::vector<TreeNode> nodes;
  Point2 start;
  std::uint64_t rng_seed = 0;
  double step = 0.0;
  Rng rng;

  AgentTree(Point2 start_pos, double step_size, std::uint64_t seed)
      : start(start_pos), rng_seed(seed), step(step_size), rng(seed) {
    nodes.push_back(TreeNode{start_pos, -1, 0, -1, false});
  }
};

struct ObservationNodeRecord {
  int node = -1;
  int area = -1;
  int path_length_edges = 0;
};

struct ExtendResult {
  enum class Status {
    added,
    trapped, // collision blocked the new edge
    skipped, // sample coincided with the nearest node
  };
  Status status = Status::trapped;
  int node = -1;
};

/// One RRT extension toward x_rand: steer a single step from the nearest
/// node and append the new node when the edge is collision-free. A node
/// landing in an unexplored area whose path has no observation yet is
/// annotated as an observation node; nodes in explored areas, or on paths
/// that already observed, are added plain.
ExtendResult extend(AgentTree& tree, Point2 x_rand, const Workspace& workspace,
                    const std::vector<int>& unexplored_areas, const EnvModel& env);

/// Samples uniformly from the workspace bounds and extends until `n_obs`
/// observation nodes exist. Throws PlanningError after max_iterations
/// (0 means 20000 * n_obs).
std::vector<ObservationNodeRecord> grow_until_observations(AgentTree& tree,
                                                           const Workspace& workspace,
                                                           const EnvModel& env,
                                                           const std::vector<int>& unexplored_areas,
                                                           int n_obs, long max_iterations = 0);

/// Extends until the tree has at least k nodes (trapped extensions do not
/// count). Throws PlanningError after max_iterations (0 means 1000 * k).
void grow_until_size(AgentTree& tree, const Workspace& workspace, int k, long max_iterations = 0);

/// Waypoints from the start (inclusive) to `node` (inclusive).
std::vector<Point2> path_to_node(const AgentTree& tree, int node);

/// All observation-node records of the tree, in node-index order.
std::vector<ObservationNodeRecord> observation_records(const AgentTree& tree);

/// Expected cost of committing to `path` no matter what is observed later:
/// belief-weighted stage costs along the path plus the belief-weighted
/// terminal cost at its end. Linear in v.
double cost_heuristic(const std::vector<Point2>& path, const UnnormalizedBelief& v,
                      const CostParams& costs);

} // namespace morrt

#endif // MORRT_RRT_HPP_
