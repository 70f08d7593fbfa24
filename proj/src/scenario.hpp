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

#ifndef MORRT_SCENARIO_HPP_
#define MORRT_SCENARIO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cost.hpp"
#include "environment.hpp"
#include "geometry.hpp"

namespace morrt {

/// Planner knobs: observation nodes per tree level, node-count floor for
/// fully-explored trees, steering step, and the run seed.
struct MorrtParams {
  int n_obs = 1;
  int k = 1;
  double step = 0.0;
  std::uint64_t seed = 0;
  long max_iterations = 0; // 0: 1000 x requested count
};

struct AgentSpec {
  Point2 start;
  Workspace workspace;
};

/// A full world description: per-agent free space, the hidden-target model,
/// planner parameters, and cost weights. costs.goal_nodes mirrors
/// env.goal_nodes.
struct Scenario {
  std::string name;
  std::vector<AgentSpec> agents;
  EnvModel env;
  BeliefVector initial_belief;
  MorrtParams params;
  CostParams costs;

  int num_agents() const { return static_cast<int>(agents.size()); }
};

/// Checks every scenario invariant and returns one message per violation
/// (empty means valid): belief sums to 1, areas pairwise disjoint, starts
/// collision-free, region shapes well-formed, parameters positive.
std::vector<std::string> validate_scenario(const Scenario& scenario);

/// Throws ValidationError listing every violation.
void require_valid(const Scenario& scenario);

} // namespace morrt

#endif // MORRT_SCENARIO_HPP_
