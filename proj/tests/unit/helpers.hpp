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

#ifndef MORRT_TESTS_HELPERS_HPP_
#define MORRT_TESTS_HELPERS_HPP_

#include <vector>

#include "plan_dp.hpp"
#include "rng.hpp"
#include "scenario.hpp"

namespace morrt::testing {

/// 10x10 world, two goals in the upper corners, `num_areas` observation
/// areas between start and goals. All agents share the same free space
/// unless an obstacle list is supplied per agent afterwards.
inline Scenario grid_scenario(int num_agents, int num_areas, double accuracy, int n_obs, int k,
                              double step, std::uint64_t seed) {
  Scenario s;
  s.name = "test-grid";
  for (int a = 0; a < num_agents; ++a) {
    AgentSpec agent;
    agent.start = {4.5 + static_cast<double>(a), 0.8};
    agent.workspace.bounds = Region::make_rect({0.0, 0.0}, {10.0, 10.0});
    s.agents.push_back(agent);
  }
  s.env.goal_nodes = {{1.5, 9.0}, {8.5, 9.0}};
  s.env.num_states = 2;
  s.env.accuracy = accuracy;
  if (num_areas >= 1) s.env.observation_areas.push_back(Region::make_rect({1.0, 4.5}, {3.0, 6.0}));
  if (num_areas >= 2) s.env.observation_areas.push_back(Region::make_rect({7.0, 4.5}, {9.0, 6.0}));
  s.initial_belief.probs = {0.5, 0.5};
  s.params = MorrtParams{n_obs, k, step, seed, 0};
  s.costs.stage_weight = 1.0;
  s.costs.terminal_weight = 2.0;
  s.costs.goal_nodes = s.env.goal_nodes;
  return s;
}

/// Plan whose observation points may be synthetic (not tied to any world);
/// used to cross-check the two cost formulations.
struct RandomPlanFixture {
  PlanTree plan;
  EnvModel env;
  BeliefVector b0;
  CostParams costs;
};

inline RandomPlanFixture random_plan_fixture(Rng& rng, int max_depth) {
  RandomPlanFixture fx;
  const int num_agents = rng.uniform01() < 0.5 ? 1 : 2;
  fx.env.num_states = 2;
  fx.env.accuracy = 0.1 + 0.85 * rng.uniform01();
  fx.env.goal_nodes = {{rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)},
                       {rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)}};
  const double b = 0.05 + 0.9 * rng.uniform01();
  fx.b0.probs = {b, 1.0 - b};
  fx.costs.stage_weight = 0.2 + rng.uniform(0.0, 2.0);
  fx.costs.terminal_weight = 0.2 + rng.uniform(0.0, 2.0);
  fx.costs.goal_nodes = fx.env.goal_nodes;

  fx.plan.num_agents = num_agents;
  fx.plan.num_observations = 2;

  // Recursive structure: each branch observes (and spawns |O| children) with
  // decreasing probability until max_depth.
  struct Builder {
    PlanTree& plan;
    Rng& rng;
    int max_depth;

    int emit(int parent, int obs, const std::vector<Point2>& starts, int depth) {
      PlanBranch branch;
      branch.id = static_cast<int>(plan.branches.size());
      branch.parent = parent;
      branch.observation = obs;
      std::vector<Point2> ends;
      for (Point2 start : starts) {
        std::vector<Point2> wp{start};
        const int edges = 1 + static_cast<int>(rng.uniform01() * 3.0);
        for (int l = 0; l < edges; ++l) {
          wp.push_back(wp.back() + Point2{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        }
        ends.push_back(wp.back());
        branch.waypoints.push_back(std::move(wp));
      }
      branch.ends_with_observation = depth < max_depth && rng.uniform01() < 0.7;
      const int id = branch.id;
      plan.branches.push_back(std::move(branch));
      if (plan.branches[static_cast<std::size_t>(id)].ends_with_observation) {
        std::vector<int> children;
        for (int o = 0; o < plan.num_observations; ++o) {
          children.push_back(emit(id, o, ends, depth + 1));
        }
        plan.branches[static_cast<std::size_t>(id)].children = std::move(children);
      }
      return id;
    }
  };

  std::vector<Point2> starts;
  for (int a = 0; a < num_agents; ++a) {
    starts.push_back({rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)});
  }
  Builder{fx.plan, rng, max_depth}.emit(-1, -1, starts, 0);
  realize_branch_weights(fx.plan, fx.b0, fx.env);
  return fx;
}

/// Small random world for planner-vs-oracle property tests: 1-2 agents,
/// 2-3 states, 1-2 areas, optional disk obstacle, mixed accuracies.
inline Scenario random_tiny_scenario(Rng& rng, std::uint64_t seed) {
  Scenario s;
  s.name = "random-tiny";
  const int num_agents = rng.uniform01() < 0.5 ? 1 : 2;
  const int num_states = rng.uniform01() < 0.25 ? 3 : 2;
  const int num_areas = rng.uniform01() < 0.5 ? 1 : 2;
  for (int a = 0; a < num_agents; ++a) {
    AgentSpec agent;
    agent.start = {rng.uniform(1, 9), rng.uniform(0.5, 1.5)};
    agent.workspace.bounds = Region::make_rect({0, 0}, {10, 10});
    if (rng.uniform01() < 0.4) {
      agent.workspace.obstacles.push_back(
          Region::make_disk({rng.uniform(2, 8), rng.uniform(3, 7)}, rng.uniform(0.4, 1.0)));
    }
    s.agents.push_back(agent);
  }
  s.env.num_states = num_states;
  for (int e = 0; e < num_states; ++e) {
    s.env.goal_nodes.push_back({rng.uniform(1, 9), rng.uniform(8, 9.5)});
  }
  s.env.observation_areas.push_back(Region::make_rect({1.0, 4.0}, {3.8, 6.0}));
  if (num_areas == 2) s.env.observation_areas.push_back(Region::make_rect({6.2, 4.0}, {9.0, 6.0}));
  s.env.accuracy = rng.uniform01() < 0.15 ? 1.0 : rng.uniform(0.5, 1.0);
  std::vector<double> belief(static_cast<std::size_t>(num_states));
  double total = 0.0;
  for (double& b : belief) {
    b = 0.1 + rng.uniform01();
    total += b;
  }
  for (double& b : belief) b /= total;
  s.initial_belief.probs = belief;
  s.params = MorrtParams{rng.uniform01() < 0.5 ? 1 : 2, 15 + static_cast<int>(rng.uniform01() * 15),
                         0.6 + 0.3 * rng.uniform01(), seed, 0};
  s.costs = CostParams{0.3 + rng.uniform(0.0, 1.5), 0.3 + rng.uniform(0.0, 3.0), s.env.goal_nodes};
  return s;
}

} // namespace morrt::testing

#endif // MORRT_TESTS_HELPERS_HPP_
