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

#include <doctest.h>

#include "helpers.hpp"
#include "multi_rrt.hpp"

using namespace morrt;

namespace {

// Straight chain of `edges` unit steps along +x from `start`; marks the last
// node as observing `area` when area >= 0.
AgentTree chain_tree(Point2 start, int edges, int area) {
  AgentTree tree(start, 1.0, 0);
  for (int i = 1; i <= edges; ++i) {
    TreeNode n;
    n.pos = {start.x + static_cast<double>(i), start.y};
    n.parent = i - 1;
    n.depth_edges = i;
    if (i == edges && area >= 0) {
      n.observed_area = area;
      n.path_has_observation = true;
    }
    tree.nodes.push_back(n);
  }
  return tree;
}

} // namespace

TEST_CASE("build_multi_rrt: no unexplored areas grows to K, no joint nodes") {
  const Scenario s = testing::grid_scenario(1, 2, 0.8, 1, 200, 0.5, 21);
  const MultiRrt multi = build_multi_rrt({s.agents[0].start}, s, {}, s.params, 99);
  REQUIRE(multi.trees.size() == 1);
  CHECK(multi.trees[0].nodes.size() >= 200);
  CHECK(multi.joint_obs_nodes.empty());
}

TEST_CASE("build_multi_rrt: two agents, two areas, N_obs=1") {
  const Scenario s = testing::grid_scenario(2, 2, 0.8, 1, 100, 0.5, 22);
  std::vector<Point2> starts{s.agents[0].start, s.agents[1].start};
  std::vector<int> unexplored{0, 1};
  const MultiRrt multi = build_multi_rrt(starts, s, unexplored, s.params, 7);
  REQUIRE(multi.trees.size() == 2);
  for (const AgentTree& tree : multi.trees) {
    CHECK(observation_records(tree).size() == 1);
  }
  // Outer product of singletons: one tuple, at most two joint nodes.
  CHECK(multi.joint_obs_nodes.size() >= 1);
  CHECK(multi.joint_obs_nodes.size() <= 2);
  for (const JointObservationNode& joint : multi.joint_obs_nodes) {
    const int obs_node = joint.per_agent[static_cast<std::size_t>(joint.observer)].node;
    CHECK(point_in_region(
        multi.trees[static_cast<std::size_t>(joint.observer)].nodes[static_cast<std::size_t>(obs_node)].pos,
        s.env.observation_areas[static_cast<std::size_t>(joint.area)]));
    // shortenPaths leaves every agent at the same edge count.
    for (std::size_t a = 0; a < joint.per_agent.size(); ++a) {
      const int depth =
          multi.trees[a].nodes[static_cast<std::size_t>(joint.per_agent[a].node)].depth_edges;
      CHECK(depth + joint.per_agent[a].pad_steps == joint.path_length_edges);
    }
  }
}

TEST_CASE("filter_candidates: multi-agent systems keep one record per area") {
  // Two records in the same area with different path lengths; a second agent
  // makes the system multi-agent so filtering applies.
  AgentTree tree = chain_tree({0, 0}, 3, 0);
  TreeNode longer;
  longer.pos = {0, 1};
  longer.parent = 0;
  longer.depth_edges = 1;
  tree.nodes.push_back(longer);
  TreeNode deep1;
  deep1.pos = {1, 1};
  deep1.parent = static_cast<int>(tree.nodes.size()) - 1;
  deep1.depth_edges = 2;
  tree.nodes.push_back(deep1);
  for (int i = 0; i < 4; ++i) {
    TreeNode n;
    n.pos = {1.0 + static_cast<double>(i), 1};
    n.parent = static_cast<int>(tree.nodes.size()) - 1;
    n.depth_edges = tree.nodes.back().depth_edges + 1;
    tree.nodes.push_back(n);
  }
  tree.nodes.back().observed_area = 0;
  tree.nodes.back().path_has_observation = true;

  std::vector<AgentTree> trees;
  trees.push_back(tree);
  trees.push_back(chain_tree({0, 5}, 2, 0));

  CostParams costs;
  costs.stage_weight = 1.0;
  costs.terminal_weight = 0.0;
  costs.goal_nodes = {{0, 0}, {0, 0}};
  const UnnormalizedBelief v{{0.5, 0.5}};

  const auto candidates = filter_candidates(trees, v, costs);
  REQUIRE(candidates.size() == 2);
  REQUIRE(candidates[0].size() == 1); // one area, one survivor
  CHECK(candidates[0][0].node == 3);  // the 3-edge path beats the 6-edge one
  REQUIRE(candidates[1].size() == 1);
}

TEST_CASE("filter_candidates: equal heuristics keep the lower node index") {
  // Two mirror-image branches from the root reach the same area at equal
  // length, so their heuristics tie exactly.
  AgentTree tree({0, 0}, 1.0, 0);
  TreeNode up;
  up.pos = {0, 1};
  up.parent = 0;
  up.depth_edges = 1;
  up.observed_area = 0;
  up.path_has_observation = true;
  tree.nodes.push_back(up);
  TreeNode down;
  down.pos = {0, -1};
  down.parent = 0;
  down.depth_edges = 1;
  down.observed_area = 0;
  down.path_has_observation = true;
  tree.nodes.push_back(down);

  std::vector<AgentTree> trees;
  trees.push_back(tree);
  trees.push_back(chain_tree({5, 0}, 1, 0));
  CostParams costs;
  costs.stage_weight = 1.0;
  costs.terminal_weight = 1.0;
  costs.goal_nodes = {{3, 0}, {-3, 0}}; // symmetric about y = 0
  const auto candidates = filter_candidates(trees, UnnormalizedBelief{{0.5, 0.5}}, costs);
  REQUIRE(candidates[0].size() == 1);
  CHECK(candidates[0][0].node == 1);
}

TEST_CASE("filter_candidates: single-agent systems keep every record") {
  AgentTree tree = chain_tree({0, 0}, 3, 0);
  TreeNode extra;
  extra.pos = {0, 1};
  extra.parent = 0;
  extra.depth_edges = 1;
  extra.observed_area = 0;
  extra.path_has_observation = true;
  tree.nodes.push_back(extra);

  std::vector<AgentTree> trees;
  trees.push_back(tree);
  CostParams costs;
  costs.stage_weight = 1.0;
  costs.terminal_weight = 1.0;
  costs.goal_nodes = {{0, 0}, {0, 0}};
  const auto candidates = filter_candidates(trees, UnnormalizedBelief{{0.5, 0.5}}, costs);
  REQUIRE(candidates.size() == 1);
  CHECK(candidates[0].size() == 2);
}

TEST_CASE("joint_observation_nodes: outer product with per-area splitting") {
  // Agent 0 observed area 0, agent 1 observed area 1: the tuple splits into
  // one joint node per area.
  std::vector<std::vector<ObservationNodeRecord>> candidates{
      {{3, 0, 3}},
      {{2, 1, 2}},
  };
  const auto joints = joint_observation_nodes(candidates);
  REQUIRE(joints.size() == 2);
  CHECK(joints[0].area == 0);
  CHECK(joints[0].observer == 0);
  CHECK(joints[1].area == 1);
  CHECK(joints[1].observer == 1);
  for (const auto& joint : joints) {
    CHECK(joint.per_agent[0].node == 3);
    CHECK(joint.per_agent[1].node == 2);
  }

  // Same area from both agents collapses to one observation, made by the
  // shorter path.
  std::vector<std::vector<ObservationNodeRecord>> same_area{
      {{3, 0, 3}},
      {{2, 0, 2}},
  };
  const auto collapsed = joint_observation_nodes(same_area);
  REQUIRE(collapsed.size() == 1);
  CHECK(collapsed[0].area == 0);
  CHECK(collapsed[0].observer == 1);

  // Single agent: one joint node per record.
  std::vector<std::vector<ObservationNodeRecord>> single{{{1, 0, 1}, {2, 1, 2}}};
  CHECK(joint_observation_nodes(single).size() == 2);

  // No candidates anywhere: empty.
  CHECK(joint_observation_nodes({{}}).empty());
}

TEST_CASE("shorten_paths: truncation and wait padding") {
  std::vector<AgentTree> trees;
  trees.push_back(chain_tree({0, 0}, 5, 0)); // observer path, 5 edges
  trees.push_back(chain_tree({0, 3}, 8, -1));

  std::vector<JointObservationNode> joints(1);
  joints[0].area = 0;
  joints[0].observer = 0;
  joints[0].path_length_edges = 5;
  joints[0].per_agent = {{5, 0}, {8, 0}};
  shorten_paths(joints, trees);

  CHECK(joints[0].path_length_edges == 5);
  CHECK(joints[0].per_agent[0].node == 5);
  CHECK(joints[0].per_agent[1].node == 5); // ancestor at 5 edges
  CHECK(joints[0].per_agent[1].pad_steps == 0);
  CHECK(trees[1].nodes[5].depth_edges == 5);

  // Observer longer than the partner: the partner waits in place.
  std::vector<AgentTree> trees2;
  trees2.push_back(chain_tree({0, 0}, 8, 0));
  trees2.push_back(chain_tree({0, 3}, 5, -1));
  std::vector<JointObservationNode> joints2(1);
  joints2[0].area = 0;
  joints2[0].observer = 0;
  joints2[0].path_length_edges = 8;
  joints2[0].per_agent = {{8, 0}, {5, 0}};
  shorten_paths(joints2, trees2);
  CHECK(joints2[0].per_agent[1].node == 5);
  CHECK(joints2[0].per_agent[1].pad_steps == 3);
  const auto padded = joint_agent_path(MultiRrt{std::move(trees2), joints2, {}}, joints2[0], 1);
  CHECK(padded.size() == 9); // 8 edges worth of waypoints, last three equal
  CHECK(padded[8] == padded[5]);

  // Equal lengths stay untouched.
  std::vector<AgentTree> trees3;
  trees3.push_back(chain_tree({0, 0}, 6, 0));
  trees3.push_back(chain_tree({0, 3}, 6, -1));
  std::vector<JointObservationNode> joints3(1);
  joints3[0].area = 0;
  joints3[0].observer = 0;
  joints3[0].per_agent = {{6, 0}, {6, 0}};
  shorten_paths(joints3, trees3);
  CHECK(joints3[0].per_agent[1].node == 6);
  CHECK(joints3[0].per_agent[1].pad_steps == 0);
  CHECK(joints3[0].path_length_edges == 6);
}

TEST_CASE("shorten_paths: truncated endpoints are ancestors of the originals") {
  const Scenario s = testing::grid_scenario(2, 2, 0.8, 2, 100, 0.5, 33);
  std::vector<Point2> starts{s.agents[0].start, s.agents[1].start};
  const std::vector<int> unexplored{0, 1};

  // Rebuild the pre-shortened joints by hand to compare against.
  MultiRrt multi = build_multi_rrt(starts, s, unexplored, s.params, 13);
  const auto candidates =
      filter_candidates(multi.trees, as_unnormalized(s.initial_belief), s.costs);
  auto raw = joint_observation_nodes(candidates);
  auto shortened = raw;
  shorten_paths(shortened, multi.trees);
  REQUIRE(raw.size() == shortened.size());
  for (std::size_t j = 0; j < raw.size(); ++j) {
    for (std::size_t a = 0; a < raw[j].per_agent.size(); ++a) {
      int node = raw[j].per_agent[a].node;
      bool found = node == shortened[j].per_agent[a].node;
      while (!found && node >= 0) {
        node = multi.trees[a].nodes[static_cast<std::size_t>(node)].parent;
        found = node == shortened[j].per_agent[a].node;
      }
      CHECK(found); // prefix preserved
    }
  }
}
