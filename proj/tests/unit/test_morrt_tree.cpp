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

#include <set>

#include <doctest.h>

#include "helpers.hpp"
#include "morrt_tree.hpp"

using namespace morrt;

TEST_CASE("build_morrt: no observation areas degenerates to one K-node level") {
  const Scenario s = testing::grid_scenario(1, 0, 0.8, 1, 150, 0.5, 5);
  const MorrtTree tree = build_morrt(s);
  REQUIRE(tree.nodes.size() == 1);
  CHECK(tree.root().multi.joint_obs_nodes.empty());
  CHECK(tree.root().multi.trees[0].nodes.size() >= 150);
  CHECK(depth(tree) == 0);
}

TEST_CASE("build_morrt: one area gives a root and one leaf child") {
  const Scenario s = testing::grid_scenario(1, 1, 0.8, 1, 60, 0.5, 6);
  const MorrtTree tree = build_morrt(s);
  REQUIRE(tree.nodes.size() == 2);
  CHECK(depth(tree) == 1);
  const MorrtNode& child = tree.nodes[1];
  CHECK(child.parent == 0);
  CHECK(child.depth == 1);
  CHECK(child.multi.joint_obs_nodes.empty()); // everything explored below
  CHECK(child.multi.explored_areas_before == std::vector<int>{0});
  CHECK(child.multi.trees[0].nodes.size() >= 60);
}

TEST_CASE("build_morrt: child starts equal the shortened joint endpoints bit for bit") {
  const Scenario s = testing::grid_scenario(2, 2, 0.8, 1, 60, 0.5, 7);
  const MorrtTree tree = build_morrt(s);
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    const MorrtNode& node = tree.nodes[id];
    for (std::size_t j = 0; j < node.multi.joint_obs_nodes.size(); ++j) {
      const MorrtNode& child = tree.nodes[static_cast<std::size_t>(node.joint_children[j])];
      const JointObservationNode& joint = node.multi.joint_obs_nodes[j];
      for (std::size_t a = 0; a < node.multi.trees.size(); ++a) {
        const Point2 endpoint =
            node.multi.trees[a].nodes[static_cast<std::size_t>(joint.per_agent[a].node)].pos;
        CHECK(child.multi.trees[a].start == endpoint);
        CHECK(child.multi.trees[a].nodes[0].pos == endpoint);
      }
    }
  }
}

TEST_CASE("build_morrt: every root-to-leaf chain explores each area exactly once") {
  const Scenario s = testing::grid_scenario(1, 2, 0.8, 2, 40, 0.5, 8);
  const MorrtTree tree = build_morrt(s);
  CHECK(depth(tree) == 2);
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    if (!tree.nodes[id].multi.joint_obs_nodes.empty()) continue; // not a leaf
    std::set<int> seen;
    int cur = static_cast<int>(id);
    while (tree.nodes[static_cast<std::size_t>(cur)].parent >= 0) {
      const MorrtNode& node = tree.nodes[static_cast<std::size_t>(cur)];
      const MorrtNode& parent = tree.nodes[static_cast<std::size_t>(node.parent)];
      const int area =
          parent.multi.joint_obs_nodes[static_cast<std::size_t>(node.source_joint)].area;
      CHECK(seen.insert(area).second); // each area only once per chain
      cur = node.parent;
    }
    CHECK(seen.size() == 2); // leaves explored everything
  }
}

TEST_CASE("build_morrt: identical seeds rebuild an identical tree") {
  const Scenario s = testing::grid_scenario(2, 2, 0.8, 1, 50, 0.5, 9);
  const MorrtTree a = build_morrt(s);
  const MorrtTree b = build_morrt(s);
  REQUIRE(a.nodes.size() == b.nodes.size());
  for (std::size_t id = 0; id < a.nodes.size(); ++id) {
    CHECK(a.nodes[id].parent == b.nodes[id].parent);
    CHECK(a.nodes[id].source_joint == b.nodes[id].source_joint);
    CHECK(a.nodes[id].multi.joint_obs_nodes.size() == b.nodes[id].multi.joint_obs_nodes.size());
    REQUIRE(a.nodes[id].multi.trees.size() == b.nodes[id].multi.trees.size());
    for (std::size_t t = 0; t < a.nodes[id].multi.trees.size(); ++t) {
      const AgentTree& ta = a.nodes[id].multi.trees[t];
      const AgentTree& tb = b.nodes[id].multi.trees[t];
      REQUIRE(ta.nodes.size() == tb.nodes.size());
      for (std::size_t n = 0; n < ta.nodes.size(); ++n) {
        CHECK(ta.nodes[n].pos == tb.nodes[n].pos);
        CHECK(ta.nodes[n].parent == tb.nodes[n].parent);
        CHECK(ta.nodes[n].observed_area == tb.nodes[n].observed_area);
      }
    }
  }
}

TEST_CASE("build_morrt: two areas with N_obs=2 give 2 children and 4 grandchildren") {
  const Scenario s = testing::grid_scenario(1, 2, 0.8, 2, 40, 0.5, 10);
  const MorrtTree tree = build_morrt(s);
  CHECK(tree.root().multi.joint_obs_nodes.size() == 2);
  int grandchildren = 0;
  for (int child_id : tree.root().joint_children) {
    grandchildren +=
        static_cast<int>(tree.nodes[static_cast<std::size_t>(child_id)].joint_children.size());
  }
  CHECK(grandchildren == 4);
  CHECK(tree.warnings.empty());
}
