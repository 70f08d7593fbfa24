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

#include "multi_rrt.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace morrt {

namespace {

int ancestor_at_depth(const AgentTree& tree, int node, int depth_edges) {
  int cur = node;
  while (tree.nodes[static_cast<std::size_t>(cur)].depth_edges > depth_edges) {
    cur = tree.nodes[static_cast<std::size_t>(cur)].parent;
  }
  return cur;
}

} // namespace

std::vector<Point2> joint_agent_path(const MultiRrt& multi, const JointObservationNode& joint,
                                     int agent) {
  const JointAgentEndpoint& end = joint.per_agent[static_cast<std::size_t>(agent)];
  std::vector<Point2> path = path_to_node(multi.trees[static_cast<std::size_t>(agent)], end.node);
  for (int i = 0; i < end.pad_steps; ++i) path.push_back(path.back());
  return path;
}

std::vector<std::vector<ObservationNodeRecord>> filter_candidates(
    const std::vector<AgentTree>& trees, const UnnormalizedBelief& v, const CostParams& costs) {
  std::vector<std::vector<ObservationNodeRecord>> result;
  result.reserve(trees.size());
  for (const AgentTree& tree : trees) {
    std::vector<ObservationNodeRecord> records = observation_records(tree);
    if (trees.size() == 1) {
      result.push_back(std::move(records)); // single-agent systems keep all nodes
      continue;
    }
    std::map<int, std::pair<double, ObservationNodeRecord>> best_per_area;
    for (const ObservationNodeRecord& rec : records) {
      const double h = cost_heuristic(path_to_node(tree, rec.node), v, costs);
      auto it = best_per_area.find(rec.area);
      if (it == best_per_area.end() || h < it->second.first) {
        best_per_area[rec.area] = {h, rec}; // records scan in node order, ties keep lower index
      }
    }
    std::vector<ObservationNodeRecord> kept;
    kept.reserve(best_per_area.size());
    for (const auto& [area, entry] : best_per_area) kept.push_back(entry.second);
    std::sort(kept.begin(), kept.end(),
              [](const ObservationNodeRecord& a, const ObservationNodeRecord& b) {
                return a.node < b.node;
              });
    result.push_back(std::move(kept));
  }
  return result;
}

std::vector<JointObservationNode> joint_observation_nodes(
    const std::vector<std::vector<ObservationNodeRecord>>& candidates_per_agent) {
  const int num_agents = static_cast<int>(candidates_per_agent.size());
  std::vector<JointObservationNode> joints;
  for (const auto& agent_candidates : candidates_per_agent) {
    if (agent_candidates.empty()) return joints; // outer product is empty
  }

  std::vector<std::size_t> index(static_cast<std::size_t>(num_agents), 0);
  while (true) {
    // One tuple of the outer product; emit one joint node per distinct
    // recorded area. When several agents record in the same area the tuple
    // collapses to one observation there, made by the recorder with the
    // shortest path (then lowest agent index) so the shortest path defines
    // the equalized length.
    std::vector<int> seen_areas;
    for (int a = 0; a < num_agents; ++a) {
      const ObservationNodeRecord& rec =
          candidates_per_agent[static_cast<std::size_t>(a)][index[static_cast<std::size_t>(a)]];
      if (std::find(seen_areas.begin(), seen_areas.end(), rec.area) != seen_areas.end()) continue;
      seen_areas.push_back(rec.area);

      int observer = a;
      int observer_len = rec.path_length_edges;
      for (int b = a + 1; b < num_agents; ++b) {
        const ObservationNodeRecord& other =
            candidates_per_agent[static_cast<std::size_t>(b)][index[static_cast<std::size_t>(b)]];
        if (other.area == rec.area && other.path_length_edges < observer_len) {
          observer = b;
          observer_len = other.path_length_edges;
        }
      }

      JointObservationNode joint;
      joint.area = rec.area;
      joint.observer = observer;
      joint.path_length_edges = observer_len;
      joint.per_agent.resize(static_cast<std::size_t>(num_agents));
      for (int b = 0; b < num_agents; ++b) {
        joint.per_agent[static_cast<std::size_t>(b)] = JointAgentEndpoint{
            candidates_per_agent[static_cast<std::size_t>(b)][index[static_cast<std::size_t>(b)]]
                .node,
            0};
      }
      joints.push_back(std::move(joint));
    }

    int axis = num_agents - 1;
    while (axis >= 0) {
      index[static_cast<std::size_t>(axis)] += 1;
      if (index[static_cast<std::size_t>(axis)] <
          candidates_per_agent[static_cast<std::size_t>(axis)].size()) {
        break;
      }
      index[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return joints;
}

void shorten_paths(std::vector<JointObservationNode>& joints,
                   const std::vector<AgentTree>& trees) {
  for (JointObservationNode& joint : joints) {
    const int observer_len =
        trees[static_cast<std::size_t>(joint.observer)]
            .nodes[static_cast<std::size_t>(
                joint.per_agent[static_cast<std::size_t>(joint.observer)].node)]
            .depth_edges;
    joint.path_length_edges = observer_len;
    for (std::size_t a = 0; a < joint.per_agent.size(); ++a) {
      if (static_cast<int>(a) == joint.observer) continue;
      JointAgentEndpoint& end = joint.per_agent[a];
      const int len = trees[a].nodes[static_cast<std::size_t>(end.node)].depth_edges;
      if (len > observer_len) {
        end.node = ancestor_at_depth(trees[a], end.node, observer_len);
        end.pad_steps = 0;
      } else {
        end.pad_steps = observer_len - len; // arrives first and waits
      }
    }
  }
}

MultiRrt build_multi_rrt(const std::vector<Point2>& starts, const Scenario& scenario,
                         const std::vector<int>& unexplored_areas, const MorrtParams& params,
                         std::uint64_t node_seed) {
  MultiRrt multi;
  const int num_agents = scenario.num_agents();
  multi.trees.reserve(static_cast<std::size_t>(num_agents));
  for (int a = 0; a < num_agents; ++a) {
    AgentTree tree(starts[static_cast<std::size_t>(a)], params.step,
                   derive_seed(node_seed, static_cast<std::uint64_t>(a)));
    const Workspace& workspace = scenario.agents[static_cast<std::size_t>(a)].workspace;
    if (!unexplored_areas.empty()) {
      grow_until_observations(tree, workspace, scenario.env, unexplored_areas, params.n_obs,
                              params.max_iterations);
    } else {
      grow_until_size(tree, workspace, params.k, params.max_iterations);
    }
    multi.trees.push_back(std::move(tree));
  }

  if (!unexplored_areas.empty()) {
    const UnnormalizedBelief entry_v = as_unnormalized(scenario.initial_belief);
    const auto candidates = filter_candidates(multi.trees, entry_v, scenario.costs);
    multi.joint_obs_nodes = joint_observation_nodes(candidates);
    shorten_paths(multi.joint_obs_nodes, multi.trees);

    // Truncation can make tuples coincide; keep the first of each.
    std::vector<JointObservationNode> unique;
    for (const JointObservationNode& joint : multi.joint_obs_nodes) {
      const bool dup = std::any_of(
          unique.begin(), unique.end(), [&joint](const JointObservationNode& other) {
            if (other.area != joint.area || other.observer != joint.observer) return false;
            for (std::size_t a = 0; a < joint.per_agent.size(); ++a) {
              if (other.per_agent[a].node != joint.per_agent[a].node ||
                  other.per_agent[a].pad_steps != joint.per_agent[a].pad_steps) {
                return false;
              }
            }
            return true;
          });
      if (!dup) unique.push_back(joint);
    }
    multi.joint_obs_nodes = std::move(unique);
  }
  return multi;
}

} // namespace morrt
