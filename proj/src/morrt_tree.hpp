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

#ifndef MORRT_MORRT_TREE_HPP_
#define MORRT_MORRT_TREE_HPP_

#include <string>
#include <vector>

#include "multi_rrt.hpp"
#include "scenario.hpp"

namespace morrt {

/// One node of the tree of RRTs. joint_children[j] is the node index of the
/// child spawned from multi.joint_obs_nodes[j].
struct MorrtNode {
  MultiRrt multi;
  int parent = -1;       // -1 for the root
  int source_joint = -1; // joint node index within the parent
  int depth = 0;
  std::vector<int> joint_children;
};

/// The full tree of RRTs: a root level grown from the initial states, plus
/// one child level per joint observation node, until every branch has
/// explored all observation areas.
struct MorrtTree {
  std::vector<MorrtNode> nodes;
  std::vector<std::string> warnings; // joint nodes dropped for unreachable areas

  const MorrtNode& root() const { return nodes.front(); }
};

/// Expands the tree of RRTs breadth-first (FIFO over parents, children in
/// joint-node order). A joint node whose child cannot grow (remaining area
/// unreachable from there) is dropped with a warning instead of failing the
/// build. Throws PlanningError when the root itself cannot grow.
MorrtTree build_morrt(const Scenario& scenario);
MorrtTree build_morrt(const Scenario& scenario, const MorrtParams& params);

/// Number of levels below the root; equals the number of observation areas
/// when every branch explores all of them.
int depth(const MorrtTree& tree);

} // namespace morrt

#endif // MORRT_MORRT_TREE_HPP_
