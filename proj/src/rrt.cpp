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

#include "rrt.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace morrt {

namespace {

int nearest_node(const AgentTree& tree, Point2 p) {
  int best = 0;
  double best_d2 = squared_distance(tree.nodes[0].pos, p);
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    const double d2 = squared_distance(tree.nodes[i].pos, p);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = static_cast<int>(i);
    }
  }
  return best;
}

bool contains(const std::vector<int>& values, int v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

Point2 sample_in_bounds(Rng& rng, const Region& bounds) {
  const double x = rng.uniform(bounds.min.x, bounds.max.x);
  const double y = rng.uniform(bounds.min.y, bounds.max.y);
  return {x, y};
}

} // namespace

ExtendResult extend(AgentTree& tree, Point2 x_rand, const Workspace& workspace,
                    const std::vector<int>& unexplored_areas, const EnvModel& env) {
  const int near = nearest_node(tree, x_rand);
  const TreeNode& near_node = tree.nodes[static_cast<std::size_t>(near)];
  if (near_node.pos == x_rand) return {ExtendResult::Status::skipped, -1};

  const Point2 pos = steer(near_node.pos, x_rand, tree.step);
  if (segment_collides(near_node.pos, pos, workspace.obstacles)) {
    return {ExtendResult::Status::trapped, -1};
  }

  TreeNode node;
  node.pos = pos;
  node.parent = near;
  node.depth_edges = near_node.depth_edges + 1;
  node.path_has_observation = near_node.path_has_observation;
  const int area = env.area_containing(pos);
  if (area >= 0 && contains(unexplored_areas, area) && !near_node.path_has_observation) {
    node.observed_area = area;
    node.path_has_observation = true;
  }
  tree.nodes.push_back(node);
  return {ExtendResult::Status::added, static_cast<int>(tree.nodes.size()) - 1};
}

std::vector<ObservationNodeRecord> grow_until_observations(
    AgentTree& tree, const Workspace& workspace, const EnvModel& env,
    const std::vector<int>& unexplored_areas, int n_obs, long max_iterations) {
  // Finding a second observation node needs a fresh path into the area, which
  // gets rare once the area's surroundings fill with post-observation nodes;
  // the bound stays generous so only genuinely unreachable areas fail.
  if (max_iterations <= 0) max_iterations = 20000L * n_obs;
  int found = 0;
  for (const TreeNode& n : tree.nodes) {
    if (n.observed_area >= 0) ++found;
  }
  for (long it = 0; it < max_iterations && found < n_obs; ++it) {
    const Point2 x_rand = sample_in_bounds(tree.rng, workspace.bounds);
    const ExtendResult r = extend(tree, x_rand, workspace, unexplored_areas, env);
    if (r.status == ExtendResult::Status::added &&
        tree.nodes[static_cast<std::size_t>(r.node)].observed_area >= 0) {
      ++found;
    }
  }
  if (found < n_obs) {
    throw PlanningError("observation areas unreachable: " + std::to_string(found) + " of " +
                        std::to_string(n_obs) + " observation nodes after " +
                        std::to_string(max_iterations) + " iterations");
  }
  return observation_records(tree);
}

void grow_until_size(AgentTree& tree, const Workspace& workspace, int k, long max_iterations) {
  if (max_iterations <= 0) max_iterations = 1000L * k;
  static const std::vector<int> kNoAreas;
  static const EnvModel kNoEnv;
  for (long it = 0; it < max_iterations && static_cast<int>(tree.nodes.size()) < k; ++it) {
    const Point2 x_rand = sample_in_bounds(tree.rng, workspace.bounds);
    extend(tree, x_rand, workspace, kNoAreas, kNoEnv);
  }
  if (static_cast<int>(tree.nodes.size()) < k) {
    throw PlanningError("tree growth stalled: " + std::to_string(tree.nodes.size()) + " of " +
                        std::to_string(k) + " nodes after " + std::to_string(max_iterations) +
                        " iterations");
  }
}

std::vector<Point2> path_to_node(const AgentTree& tree, int node) {
  std::vector<Point2> path;
  for (int i = node; i >= 0; i = tree.nodes[static_cast<std::size_t>(i)].parent) {
    path.push_back(tree.nodes[static_cast<std::size_t>(i)].pos);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<ObservationNodeRecord> observation_records(const AgentTree& tree) {
  std::vector<ObservationNodeRecord> records;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    if (tree.nodes[i].observed_area >= 0) {
      records.push_back(ObservationNodeRecord{static_cast<int>(i), tree.nodes[i].observed_area,
                                              tree.nodes[i].depth_edges});
    }
  }
  return records;
}

double cost_heuristic(const std::vector<Point2>& path, const UnnormalizedBelief& v,
                      const CostParams& costs) {
  double total = 0.0;
  const int num_states = static_cast<int>(costs.goal_nodes.size());
  for (int e = 0; e < num_states; ++e) {
    double per_state = 0.0;
    for (std::size_t l = 0; l + 1 < path.size(); ++l) {
      per_state += stage_cost(path[l], path[l + 1] - path[l], e, costs);
    }
    per_state += terminal_cost(path.back(), e, costs);
    total += v.weights[static_cast<std::size_t>(e)] * per_state;
  }
  return total;
}

} // namespace morrt
