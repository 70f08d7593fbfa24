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

#include "morrt_tree.hpp"

#include <algorithm>
#include <deque>

#include "errors.hpp"

namespace morrt {

namespace {

std::vector<int> all_area_indices(const Scenario& scenario) {
  std::vector<int> areas(scenario.env.observation_areas.size());
  for (std::size_t i = 0; i < areas.size(); ++i) areas[i] = static_cast<int>(i);
  return areas;
}

std::vector<int> remove_area(const std::vector<int>& areas, int area) {
  std::vector<int> out;
  out.reserve(areas.size());
  for (int a : areas) {
    if (a != area) out.push_back(a);
  }
  return out;
}

std::vector<int> explored_from(const std::vector<int>& all, const std::vector<int>& unexplored) {
  std::vector<int> explored;
  for (int a : all) {
    if (std::find(unexplored.begin(), unexplored.end(), a) == unexplored.end()) {
      explored.push_back(a);
    }
  }
  return explored;
}

} // namespace

MorrtTree build_morrt(const Scenario& scenario) { return build_morrt(scenario, scenario.params); }

MorrtTree build_morrt(const Scenario& scenario, const MorrtParams& params) {
  require_valid(scenario);

  MorrtTree tree;
  const std::vector<int> all_areas = all_area_indices(scenario);

  std::vector<Point2> starts;
  starts.reserve(scenario.agents.size());
  for (const AgentSpec& agent : scenario.agents) starts.push_back(agent.start);

  MorrtNode root;
  try {
    root.multi = build_multi_rrt(starts, scenario, all_areas, params, params.seed);
  } catch (const PlanningError& e) {
    throw PlanningError(std::string("root level failed: ") + e.what());
  }
  root.joint_children.assign(root.multi.joint_obs_nodes.size(), -1);
  tree.nodes.push_back(std::move(root));

  // Per-node state carried through the frontier.
  std::vector<std::vector<int>> unexplored_of_node;
  std::vector<std::uint64_t> seed_of_node;
  unexplored_of_node.push_back(all_areas);
  seed_of_node.push_back(params.seed);

  std::deque<int> parents;
  parents.push_back(0);
  while (!parents.empty()) {
    const int parent_id = parents.front();
    parents.pop_front();

    const std::vector<int> parent_unexplored = unexplored_of_node[static_cast<std::size_t>(parent_id)];
    const std::uint64_t parent_seed = seed_of_node[static_cast<std::size_t>(parent_id)];
    const std::size_t joint_count =
        tree.nodes[static_cast<std::size_t>(parent_id)].multi.joint_obs_nodes.size();

    std::vector<JointObservationNode> kept_joints;
    std::vector<int> kept_children;
    for (std::size_t j = 0; j < joint_count; ++j) {
      const MorrtNode& parent = tree.nodes[static_cast<std::size_t>(parent_id)];
      const JointObservationNode joint = parent.multi.joint_obs_nodes[j];
      const int parent_depth = parent.depth;

      std::vector<Point2> child_starts;
      child_starts.reserve(parent.multi.trees.size());
      for (std::size_t a = 0; a < parent.multi.trees.size(); ++a) {
        child_starts.push_back(
            parent.multi.trees[a].nodes[static_cast<std::size_t>(joint.per_agent[a].node)].pos);
      }

      const std::vector<int> child_unexplored = remove_area(parent_unexplored, joint.area);
      const std::uint64_t child_seed = derive_seed(parent_seed, static_cast<std::uint64_t>(j));

      MorrtNode child;
      try {
        child.multi = build_multi_rrt(child_starts, scenario, child_unexplored, params, child_seed);
      } catch (const PlanningError& e) {
        tree.warnings.push_back("dropped joint node " + std::to_string(j) + " at depth " +
                                std::to_string(parent_depth) + ": " + e.what());
        continue;
      }
      child.multi.explored_areas_before = explored_from(all_areas, child_unexplored);
      child.parent = parent_id;
      child.source_joint = static_cast<int>(kept_joints.size());
      child.depth = parent_depth + 1;
      child.joint_children.assign(child.multi.joint_obs_nodes.size(), -1);

      const int child_id = static_cast<int>(tree.nodes.size());
      kept_joints.push_back(joint);
      kept_children.push_back(child_id);
      tree.nodes.push_back(std::move(child));
      unexplored_of_node.push_back(child_unexplored);
      seed_of_node.push_back(child_seed);
      parents.push_back(child_id);
    }

    MorrtNode& parent = tree.nodes[static_cast<std::size_t>(parent_id)];
    parent.multi.joint_obs_nodes = std::move(kept_joints);
    parent.joint_children = std::move(kept_children);
  }
  return tree;
}

int depth(const MorrtTree& tree) {
  int max_depth = 0;
  for (const MorrtNode& node : tree.nodes) max_depth = std::max(max_depth, node.depth);
  return max_depth;
}

} // namespace morrt
