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

#ifndef MORRT_MULTI_RRT_HPP_
#define MORRT_MULTI_RRT_HPP_

#include <cstdint>
#include <vector>

#include "rrt.hpp"
#include "scenario.hpp"

namespace morrt {

/// One agent's endpoint inside a joint observation node. Agents whose full
/// path is shorter than the equalized length keep their endpoint and wait
/// there: `pad_steps` zero-length steps extend the path to the common edge
/// count without moving or costing anything.
struct JointAgentEndpoint {
  int node = -1;
  int pad_steps = 0;
};

/// An M-tuple of per-agent endpoints at which the team makes one shared
/// observation. After shortening, every agent's path to its endpoint has
/// exactly path_length_edges edges, and the observer's endpoint lies inside
/// `area`.
struct JointObservationNode {
  std::vector<JointAgentEndpoint> per_agent;
  int area = -1;
  int observer = -1;
  int path_length_edges = 0;
};

/// One level of the tree of RRTs: M agent trees grown from a common entry,
/// plus the joint observation nodes they induce.
struct MultiRrt {
  std::vector<AgentTree> trees;
  std::vector<JointObservationNode> joint_obs_nodes;
  std::vector<int> explored_areas_before; // sorted area indices
};

/// Waypoints of agent `agent` from its tree root to its endpoint in `joint`,
/// including the wait padding.
std::vector<Point2> joint_agent_path(const MultiRrt& multi, const JointObservationNode& joint,
                                     int agent);

/// Grows one level: per agent, until n_obs observation nodes when unexplored
/// areas remain, else until k nodes; then forms, filters, and shortens the
/// joint observation nodes. Tree a is seeded with derive_seed(node_seed, a).
MultiRrt build_multi_rrt(const std::vector<Point2>& starts, const Scenario& scenario,
                         const std::vector<int>& unexplored_areas, const MorrtParams& params,
                         std::uint64_t node_seed);

/// Keeps, per (agent, area), only the record whose root-to-node path has the
/// lowest cost heuristic under v; single-agent systems keep every record.
/// Ties go to the lower node index.
std::vector<std::vector<ObservationNodeRecord>> filter_candidates(
    const std::vector<AgentTree>& trees, const UnnormalizedBelief& v, const CostParams& costs);

/// Outer product of the per-agent candidate sets. Every tuple yields one
/// joint node per distinct recorded area, observed by the lowest-index agent
/// recording there; the other agents' nodes are plain path endpoints.
std::vector<JointObservationNode> joint_observation_nodes(
    const std::vector<std::vector<ObservationNodeRecord>>& candidates_per_agent);

/// Equalizes path lengths within each joint node to the observer's edge
/// count: longer paths are truncated to the ancestor at that depth, shorter
/// paths wait in place via zero-length padding.
void shorten_paths(std::vector<JointObservationNode>& joints,
                   const std::vector<AgentTree>& trees);

} // namespace morrt

#endif // MORRT_MULTI_RRT_HPP_
