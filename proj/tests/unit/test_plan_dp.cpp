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

#include <functional>

#include <doctest.h>

#include "errors.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "plan_dp.hpp"

using namespace morrt;

namespace {

double tree_cum_length(const AgentTree& tree, int node) {
  double len = 0.0;
  for (int n = node; tree.nodes[static_cast<std::size_t>(n)].parent >= 0;
       n = tree.nodes[static_cast<std::size_t>(n)].parent) {
    len += distance(tree.nodes[static_cast<std::size_t>(n)].pos,
                    tree.nodes[static_cast<std::size_t>(tree.nodes[static_cast<std::size_t>(n)].parent)].pos);
  }
  return len;
}

// Minimum cost over plans that never react to observations: pick one chain
// of joint nodes (possibly empty) plus end nodes, and charge the whole path
// under the initial belief.
double best_committed_cost(const MorrtTree& tree, const BeliefVector& b0,
                           const CostParams& costs) {
  const int num_agents = static_cast<int>(tree.root().multi.trees.size());
  std::function<double(int, std::vector<double>)> rec =
      [&](int node_id, std::vector<double> prefix) {
        const MorrtNode& node = tree.nodes[static_cast<std::size_t>(node_id)];
        double best = 0.0;
        for (int a = 0; a < num_agents; ++a) {
          const AgentTree& agent_tree = node.multi.trees[static_cast<std::size_t>(a)];
          double agent_best = 0.0;
          bool first = true;
          for (std::size_t n = 0; n < agent_tree.nodes.size(); ++n) {
            double c = costs.stage_weight *
                       (prefix[static_cast<std::size_t>(a)] +
                        tree_cum_length(agent_tree, static_cast<int>(n)));
            for (std::size_t e = 0; e < b0.probs.size(); ++e) {
              c += b0.probs[e] *
                   terminal_cost(agent_tree.nodes[n].pos, static_cast<int>(e), costs);
            }
            if (first || c < agent_best) {
              first = false;
              agent_best = c;
            }
          }
          best += agent_best;
        }
        for (std::size_t j = 0; j < node.multi.joint_obs_nodes.size(); ++j) {
          std::vector<double> child_prefix = prefix;
          for (int a = 0; a < num_agents; ++a) {
            child_prefix[static_cast<std::size_t>(a)] += tree_cum_length(
                node.multi.trees[static_cast<std::size_t>(a)],
                node.multi.joint_obs_nodes[j].per_agent[static_cast<std::size_t>(a)].node);
          }
          best = std::min(best, rec(node.joint_children[j], child_prefix));
        }
        return best;
      };
  return rec(0, std::vector<double>(static_cast<std::size_t>(num_agents), 0.0));
}

bool subplans_identical(const PlanTree& plan, int lhs, int rhs) {
  const PlanBranch& a = plan.branches[static_cast<std::size_t>(lhs)];
  const PlanBranch& b = plan.branches[static_cast<std::size_t>(rhs)];
  if (a.waypoints != b.waypoints) return false;
  if (a.ends_with_observation != b.ends_with_observation) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t o = 0; o < a.children.size(); ++o) {
    if (!subplans_identical(plan, a.children[o], b.children[o])) return false;
  }
  return true;
}

} // namespace

TEST_CASE("best_no_branch: single-node trees pay only the terminal cost") {
  const Scenario s = testing::grid_scenario(2, 0, 0.8, 1, 1, 0.5, 4);
  MultiRrt multi;
  multi.trees.push_back(AgentTree{{2, 2}, 0.5, 1});
  multi.trees.push_back(AgentTree{{8, 8}, 0.5, 2});
  const UnnormalizedBelief v{{0.5, 0.5}};
  const NoBranchChoice choice = best_no_branch(multi, v, s.costs);
  CHECK(choice.node_per_agent == std::vector<int>{0, 0});
  double expected = 0.0;
  for (int e = 0; e < 2; ++e) {
    expected += 0.5 * terminal_cost({2, 2}, e, s.costs);
    expected += 0.5 * terminal_cost({8, 8}, e, s.costs);
  }
  CHECK(choice.cost == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("best_no_branch matches a brute-force scan over node tuples") {
  const Scenario s = testing::grid_scenario(2, 0, 0.8, 1, 45, 0.6, 12);
  const MorrtTree tree = build_morrt(s);
  const MultiRrt& multi = tree.root().multi;
  const UnnormalizedBelief v{{0.3, 0.45}};
  const NoBranchChoice choice = best_no_branch(multi, v, s.costs);

  // Exhaustive over all (node_0, node_1) pairs.
  double brute = 0.0;
  bool first = true;
  for (std::size_t n0 = 0; n0 < multi.trees[0].nodes.size(); ++n0) {
    for (std::size_t n1 = 0; n1 < multi.trees[1].nodes.size(); ++n1) {
      double c = 0.0;
      const double mass = v.weights[0] + v.weights[1];
      c += mass * s.costs.stage_weight * tree_cum_length(multi.trees[0], static_cast<int>(n0));
      c += mass * s.costs.stage_weight * tree_cum_length(multi.trees[1], static_cast<int>(n1));
      for (int e = 0; e < 2; ++e) {
        c += v.weights[static_cast<std::size_t>(e)] *
             (terminal_cost(multi.trees[0].nodes[n0].pos, e, s.costs) +
              terminal_cost(multi.trees[1].nodes[n1].pos, e, s.costs));
      }
      if (first || c < brute) {
        first = false;
        brute = c;
      }
    }
  }
  CHECK(choice.cost == doctest::Approx(brute).epsilon(1e-9));
}

TEST_CASE("best_plan: no observation areas degenerates to the best fixed paths") {
  const Scenario s = testing::grid_scenario(1, 0, 0.8, 1, 80, 0.5, 14);
  const MorrtTree tree = build_morrt(s);
  const PlanTree plan = best_plan(tree, s.initial_belief, s.env, s.costs);
  REQUIRE(plan.branches.size() == 1);
  CHECK_FALSE(plan.branches[0].ends_with_observation);
  const NoBranchChoice choice =
      best_no_branch(tree.root().multi, as_unnormalized(s.initial_belief), s.costs);
  CHECK(plan_expected_cost(plan, s.costs) == doctest::Approx(choice.cost).epsilon(1e-9));
}

TEST_CASE("best_plan cost never exceeds the committed-path optimum") {
  for (std::uint64_t seed : {31ULL, 32ULL, 33ULL}) {
    const Scenario s = testing::grid_scenario(1, 2, 0.8, 1, 30, 0.7, seed);
    const MorrtTree tree = build_morrt(s);
    const PlanTree plan = best_plan(tree, s.initial_belief, s.env, s.costs);
    const double committed = best_committed_cost(tree, s.initial_belief, s.costs);
    CHECK(plan_expected_cost(plan, s.costs) <= committed + 1e-9);
    const NoBranchChoice root_only =
        best_no_branch(tree.root().multi, as_unnormalized(s.initial_belief), s.costs);
    CHECK(plan_expected_cost(plan, s.costs) <= root_only.cost + 1e-9);
  }
}

TEST_CASE("best_plan equals the exhaustive oracle on tiny instances") {
  for (std::uint64_t seed : {41ULL, 42ULL, 43ULL}) {
    const Scenario s = testing::grid_scenario(seed % 2 == 0 ? 2 : 1, 2, 0.8, 1, 25, 0.8, seed);
    const MorrtTree tree = build_morrt(s);
    const PlanTree plan = best_plan(tree, s.initial_belief, s.env, s.costs);
    const OracleResult oracle = enumerate_best(tree, s.initial_belief, s.env, s.costs);
    CHECK(plan_expected_cost(plan, s.costs) == doctest::Approx(oracle.cost).epsilon(1e-9));
  }
}

TEST_CASE("best_plan equals the oracle on random worlds") {
  Rng rng(9090);
  int ran = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Scenario s = testing::random_tiny_scenario(rng, 5000 + static_cast<std::uint64_t>(trial));
    try {
      const MorrtTree tree = build_morrt(s);
      const PlanTree plan = best_plan(tree, s.initial_belief, s.env, s.costs);
      const double dp = plan_expected_cost(plan, s.costs);
      OracleLimits limits;
      limits.max_nodes = 20000;
      limits.max_evaluations = 5e7;
      const OracleResult oracle = enumerate_best(tree, s.initial_belief, s.env, s.costs, limits);
      CHECK(dp == doctest::Approx(oracle.cost).epsilon(1e-9));
      CHECK(direct_expected_cost(plan, s.env, s.initial_belief, s.costs) ==
            doctest::Approx(dp).epsilon(1e-9));
      ++ran;
    } catch (const PlanningError&) {
      // Unlucky obstacle draws can wall off an area; skip those worlds.
    }
  }
  CHECK(ran >= 15);
}

TEST_CASE("uninformative observations: branching buys nothing at p = 0.5") {
  for (std::uint64_t seed : {51ULL, 52ULL}) {
    const Scenario s = testing::grid_scenario(1, 2, 0.5, 1, 30, 0.7, seed);
    const MorrtTree tree = build_morrt(s);
    const PlanTree plan = best_plan(tree, s.initial_belief, s.env, s.costs);
    const double committed = best_committed_cost(tree, s.initial_belief, s.costs);
    CHECK(plan_expected_cost(plan, s.costs) == doctest::Approx(committed).epsilon(1e-9));
    for (const PlanBranch& branch : plan.branches) {
      if (!branch.ends_with_observation) continue;
      for (std::size_t o = 1; o < branch.children.size(); ++o) {
        CHECK(subplans_identical(plan, branch.children[0], branch.children[o]));
      }
    }
  }
}

TEST_CASE("scaling both cost weights rescales the cost but not the plan") {
  const Scenario s = testing::grid_scenario(1, 2, 0.8, 1, 30, 0.7, 61);
  const MorrtTree tree = build_morrt(s);
  const PlanTree plan = best_plan(tree, s.initial_belief, s.env, s.costs);

  CostParams scaled = s.costs;
  scaled.stage_weight *= 3.0;
  scaled.terminal_weight *= 3.0;
  const PlanTree plan_scaled = best_plan(tree, s.initial_belief, s.env, scaled);
  CHECK(plan_structurally_equal(plan, plan_scaled));
  CHECK(plan_expected_cost(plan_scaled, scaled) ==
        doctest::Approx(3.0 * plan_expected_cost(plan, s.costs)).epsilon(1e-9));
}

TEST_CASE("realize_branch_weights: recursion examples and idempotence") {
  EnvModel env;
  env.num_states = 2;
  env.accuracy = 0.8;
  env.goal_nodes = {{0, 10}, {10, 10}};

  PlanTree plan;
  plan.num_agents = 1;
  plan.num_observations = 2;
  PlanBranch root;
  root.id = 0;
  root.waypoints = {{{0, 0}, {1, 0}}};
  root.ends_with_observation = true;
  root.children = {1, 2};
  PlanBranch left;
  left.id = 1;
  left.parent = 0;
  left.observation = 0;
  left.waypoints = {{{1, 0}, {2, 0}}};
  left.ends_with_observation = true;
  left.children = {3, 4};
  PlanBranch right;
  right.id = 2;
  right.parent = 0;
  right.observation = 1;
  right.waypoints = {{{1, 0}, {1, 1}}};
  PlanBranch deep0;
  deep0.id = 3;
  deep0.parent = 1;
  deep0.observation = 0;
  deep0.waypoints = {{{2, 0}, {3, 0}}};
  PlanBranch deep1;
  deep1.id = 4;
  deep1.parent = 1;
  deep1.observation = 1;
  deep1.waypoints = {{{2, 0}, {2, 1}}};
  plan.branches = {root, left, right, deep0, deep1};

  const BeliefVector b0{{0.5, 0.5}};
  realize_branch_weights(plan, b0, env);
  CHECK(plan.branches[1].v.weights[0] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(plan.branches[1].v.weights[1] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(plan.branches[3].v.weights[0] == doctest::Approx(0.32).epsilon(1e-12));
  CHECK(plan.branches[3].v.weights[1] == doctest::Approx(0.02).epsilon(1e-12));

  PlanTree again = plan;
  realize_branch_weights(again, b0, env);
  CHECK(plan_structurally_equal(plan, again));

  env.accuracy = 1.0;
  realize_branch_weights(plan, b0, env);
  CHECK(plan.branches[1].v.weights[0] == doctest::Approx(0.5));
  CHECK(plan.branches[1].v.weights[1] == 0.0);
  // The contradictory grandchild keeps an all-zero weight vector.
  CHECK(plan.branches[4].v.weights[0] == 0.0);
  CHECK(plan.branches[4].v.weights[1] == 0.0);
}
