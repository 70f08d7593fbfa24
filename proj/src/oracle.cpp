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

#include "oracle.hpp"

#include <cmath>
#include <functional>
#include <utility>

#include "errors.hpp"
#include "plan_dp.hpp"

namespace morrt {

namespace {

// A candidate branching skeleton: either commit to fixed paths in the current
// level, or pay the way to joint node `joint` and continue with one child
// skeleton per observation outcome.
struct Skeleton {
  bool branch = false;
  int joint = -1;
  std::vector<Skeleton> children;
};

double wrong_label_likelihood(const EnvModel& env) {
  return env.num_states > 1 ? (1.0 - env.accuracy) / static_cast<double>(env.num_states - 1)
                            : 1.0;
}

double likelihood(const EnvModel& env, int state, int observation) {
  if (env.num_states == 1) return 1.0;
  return state == observation ? env.accuracy : wrong_label_likelihood(env);
}

std::vector<double> tree_cumulative_lengths(const AgentTree& tree) {
  std::vector<double> cum(tree.nodes.size(), 0.0);
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    const int parent = tree.nodes[i].parent;
    cum[i] = cum[static_cast<std::size_t>(parent)] +
             distance(tree.nodes[static_cast<std::size_t>(parent)].pos, tree.nodes[i].pos);
  }
  return cum;
}

class Enumerator {
 public:
  Enumerator(const MorrtTree& morrt, const BeliefVector& b0, const EnvModel& env,
             const CostParams& costs)
      : morrt_(morrt), b0_(b0), env_(env), costs_(costs) {
    lengths_.reserve(morrt.nodes.size());
    for (const MorrtNode& node : morrt.nodes) {
      std::vector<std::vector<double>> per_tree;
      for (const AgentTree& tree : node.multi.trees) {
        per_tree.push_back(tree_cumulative_lengths(tree));
      }
      lengths_.push_back(std::move(per_tree));
    }
  }

  // (number of skeletons, total structure leaves over all skeletons).
  std::pair<double, double> count(int node_id) const {
    const MorrtNode& node = morrt_.nodes[static_cast<std::size_t>(node_id)];
    double skeletons = 1.0;
    double leaves = 1.0;
    const double num_obs = static_cast<double>(env_.num_states);
    for (std::size_t j = 0; j < node.multi.joint_obs_nodes.size(); ++j) {
      const auto [child_s, child_l] = count(node.joint_children[j]);
      skeletons += std::pow(child_s, num_obs);
      leaves += num_obs * std::pow(child_s, num_obs - 1.0) * child_l;
    }
    return {skeletons, leaves};
  }

  std::vector<Skeleton> all_skeletons(int node_id) const {
    const MorrtNode& node = morrt_.nodes[static_cast<std::size_t>(node_id)];
    std::vector<Skeleton> result;
    result.push_back(Skeleton{}); // committing here is always a candidate
    for (std::size_t j = 0; j < node.multi.joint_obs_nodes.size(); ++j) {
      const std::vector<Skeleton> child_options = all_skeletons(node.joint_children[j]);
      std::vector<std::size_t> combo(static_cast<std::size_t>(env_.num_states), 0);
      while (true) {
        Skeleton s;
        s.branch = true;
        s.joint = static_cast<int>(j);
        for (int o = 0; o < env_.num_states; ++o) {
          s.children.push_back(child_options[combo[static_cast<std::size_t>(o)]]);
        }
        result.push_back(std::move(s));

        int axis = env_.num_states - 1;
        while (axis >= 0) {
          combo[static_cast<std::size_t>(axis)] += 1;
          if (combo[static_cast<std::size_t>(axis)] < child_options.size()) break;
          combo[static_cast<std::size_t>(axis)] = 0;
          --axis;
        }
        if (axis < 0) break;
      }
    }
    return result;
  }

  /// Direct expectation of a skeleton's cost, choosing the best end node per
  /// (observation history, agent) by exhaustive scan.
  double evaluate(const Skeleton& s, int node_id, const std::vector<double>& history_weights,
                  const std::vector<double>& prefix_len) const {
    const MorrtNode& node = morrt_.nodes[static_cast<std::size_t>(node_id)];
    const std::size_t num_agents = node.multi.trees.size();
    if (!s.branch) {
      double total = 0.0;
      for (std::size_t a = 0; a < num_agents; ++a) {
        total += best_end_cost(node_id, static_cast<int>(a), history_weights, prefix_len[a]);
      }
      return total;
    }

    const JointObservationNode& joint = node.multi.joint_obs_nodes[static_cast<std::size_t>(s.joint)];
    const int child_id = node.joint_children[static_cast<std::size_t>(s.joint)];
    std::vector<double> child_prefix(num_agents);
    for (std::size_t a = 0; a < num_agents; ++a) {
      child_prefix[a] =
          prefix_len[a] +
          lengths_[static_cast<std::size_t>(node_id)][a]
                  [static_cast<std::size_t>(joint.per_agent[a].node)];
    }
    const Point2 x_obs =
        node.multi.trees[static_cast<std::size_t>(joint.observer)]
            .nodes[static_cast<std::size_t>(
                joint.per_agent[static_cast<std::size_t>(joint.observer)].node)]
            .pos;

    double total = 0.0;
    for (int o = 0; o < env_.num_states; ++o) {
      std::vector<double> child_weights(history_weights.size());
      for (std::size_t e = 0; e < history_weights.size(); ++e) {
        child_weights[e] =
            history_weights[e] * observation_likelihood(env_, static_cast<int>(e), o, x_obs);
      }
      total += evaluate(s.children[static_cast<std::size_t>(o)], child_id, child_weights,
                        child_prefix);
    }
    return total;
  }

  /// Minimum over end nodes of the full realized-path cost for one history:
  /// sum over states of prior * likelihood product * (stage + terminal).
  double best_end_cost(int node_id, int agent, const std::vector<double>& history_weights,
                       double prefix_len) const {
    const AgentTree& tree = morrt_.nodes[static_cast<std::size_t>(node_id)]
                                .multi.trees[static_cast<std::size_t>(agent)];
    const std::vector<double>& cum =
        lengths_[static_cast<std::size_t>(node_id)][static_cast<std::size_t>(agent)];
    double best = 0.0;
    bool first = true;
    for (std::size_t n = 0; n < tree.nodes.size(); ++n) {
      double c = 0.0;
      for (std::size_t e = 0; e < history_weights.size(); ++e) {
        c += b0_.probs[e] * history_weights[e] *
             (costs_.stage_weight * (prefix_len + cum[n]) +
              terminal_cost(tree.nodes[n].pos, static_cast<int>(e), costs_));
      }
      if (first || c < best) {
        first = false;
        best = c;
      }
    }
    return best;
  }

  int best_end_node(int node_id, int agent, const std::vector<double>& history_weights) const {
    const AgentTree& tree = morrt_.nodes[static_cast<std::size_t>(node_id)]
                                .multi.trees[static_cast<std::size_t>(agent)];
    const std::vector<double>& cum =
        lengths_[static_cast<std::size_t>(node_id)][static_cast<std::size_t>(agent)];
    int best_node = 0;
    double best = 0.0;
    bool first = true;
    for (std::size_t n = 0; n < tree.nodes.size(); ++n) {
      double c = 0.0;
      for (std::size_t e = 0; e < history_weights.size(); ++e) {
        c += b0_.probs[e] * history_weights[e] *
             (costs_.stage_weight * cum[n] +
              terminal_cost(tree.nodes[n].pos, static_cast<int>(e), costs_));
      }
      if (first || c < best) {
        first = false;
        best = c;
        best_node = static_cast<int>(n);
      }
    }
    return best_node;
  }

  int materialize(PlanTree& plan, const Skeleton& s, int node_id,
                  const std::vector<double>& history_weights, int parent_branch,
                  int entry_observation) const {
    const MorrtNode& node = morrt_.nodes[static_cast<std::size_t>(node_id)];
    PlanBranch branch;
    branch.id = static_cast<int>(plan.branches.size());
    branch.parent = parent_branch;
    branch.observation = entry_observation;
    if (s.branch) {
      const JointObservationNode& joint =
          node.multi.joint_obs_nodes[static_cast<std::size_t>(s.joint)];
      branch.ends_with_observation = true;
      branch.obs_agent = joint.observer;
      branch.obs_area = joint.area;
      for (std::size_t a = 0; a < node.multi.trees.size(); ++a) {
        branch.waypoints.push_back(joint_agent_path(node.multi, joint, static_cast<int>(a)));
      }
    } else {
      for (std::size_t a = 0; a < node.multi.trees.size(); ++a) {
        const int end = best_end_node(node_id, static_cast<int>(a), history_weights);
        branch.waypoints.push_back(path_to_node(node.multi.trees[a], end));
      }
    }
    const int branch_id = branch.id;
    plan.branches.push_back(std::move(branch));

    if (s.branch) {
      const MorrtNode& fresh = morrt_.nodes[static_cast<std::size_t>(node_id)];
      const JointObservationNode& joint =
          fresh.multi.joint_obs_nodes[static_cast<std::size_t>(s.joint)];
      const Point2 x_obs =
          fresh.multi.trees[static_cast<std::size_t>(joint.observer)]
              .nodes[static_cast<std::size_t>(
                  joint.per_agent[static_cast<std::size_t>(joint.observer)].node)]
              .pos;
      const int child_id = fresh.joint_children[static_cast<std::size_t>(s.joint)];
      std::vector<int> children;
      for (int o = 0; o < env_.num_states; ++o) {
        std::vector<double> child_weights(history_weights.size());
        for (std::size_t e = 0; e < history_weights.size(); ++e) {
          child_weights[e] =
              history_weights[e] * observation_likelihood(env_, static_cast<int>(e), o, x_obs);
        }
        children.push_back(materialize(plan, s.children[static_cast<std::size_t>(o)], child_id,
                                       child_weights, branch_id, o));
      }
      plan.branches[static_cast<std::size_t>(branch_id)].children = std::move(children);
    }
    return branch_id;
  }

 private:
  const MorrtTree& morrt_;
  const BeliefVector& b0_;
  const EnvModel& env_;
  const CostParams& costs_;
  std::vector<std::vector<std::vector<double>>> lengths_;
};

} // namespace

OracleResult enumerate_best(const MorrtTree& morrt, const BeliefVector& b0, const EnvModel& env,
                            const CostParams& costs, const OracleLimits& limits) {
  int total_nodes = 0;
  for (const MorrtNode& node : morrt.nodes) {
    for (const AgentTree& tree : node.multi.trees) {
      total_nodes += static_cast<int>(tree.nodes.size());
    }
  }
  if (total_nodes > limits.max_nodes || depth(morrt) > limits.max_depth) {
    throw PlanningError("instance too large for oracle");
  }

  Enumerator enumerator(morrt, b0, env, costs);
  const auto [skeletons, leaves] = enumerator.count(0);
  // Every structure leaf triggers one end-node scan per agent.
  const double evaluations =
      leaves * static_cast<double>(morrt.nodes.front().multi.trees.size()) *
      static_cast<double>(total_nodes);
  if (!(evaluations <= limits.max_evaluations) || !std::isfinite(skeletons)) {
    throw PlanningError("instance too large for oracle");
  }

  const std::vector<Skeleton> candidates = enumerator.all_skeletons(0);
  const std::vector<double> unit_weights(static_cast<std::size_t>(env.num_states), 1.0);
  const std::vector<double> zero_prefix(morrt.nodes.front().multi.trees.size(), 0.0);

  double best_cost = 0.0;
  const Skeleton* best = nullptr;
  for (const Skeleton& s : candidates) {
    const double c = enumerator.evaluate(s, 0, unit_weights, zero_prefix);
    if (best == nullptr || c < best_cost) {
      best = &s;
      best_cost = c;
    }
  }

  OracleResult result;
  result.cost = best_cost;
  result.plan.num_agents = static_cast<int>(morrt.nodes.front().multi.trees.size());
  result.plan.num_observations = env.num_states;
  enumerator.materialize(result.plan, *best, 0, unit_weights, -1, -1);
  realize_branch_weights(result.plan, b0, env);
  return result;
}

double direct_expected_cost(const PlanTree& plan, const EnvModel& env, const BeliefVector& b0,
                            const CostParams& costs) {
  const int num_states = env.num_states;
  double total = 0.0;

  // Realized-path recursion: walk every root-to-leaf branch chain carrying the
  // likelihood product per state and the traversed length per agent.
  std::function<void(const PlanBranch&, std::vector<double>, std::vector<double>)> walk =
      [&](const PlanBranch& branch, std::vector<double> weights, std::vector<double> lengths) {
        for (std::size_t a = 0; a < branch.waypoints.size(); ++a) {
          const auto& wp = branch.waypoints[a];
          for (std::size_t l = 0; l + 1 < wp.size(); ++l) {
            lengths[a] += distance(wp[l], wp[l + 1]);
          }
        }
        if (!branch.ends_with_observation) {
          for (std::size_t a = 0; a < branch.waypoints.size(); ++a) {
            for (int e = 0; e < num_states; ++e) {
              total += b0.probs[static_cast<std::size_t>(e)] *
                       weights[static_cast<std::size_t>(e)] *
                       (costs.stage_weight * lengths[a] +
                        terminal_cost(branch.waypoints[a].back(), e, costs));
            }
          }
          return;
        }
        for (int child_id : branch.children) {
          const PlanBranch& child = plan.branches[static_cast<std::size_t>(child_id)];
          std::vector<double> child_weights(weights.size());
          for (int e = 0; e < num_states; ++e) {
            child_weights[static_cast<std::size_t>(e)] =
                weights[static_cast<std::size_t>(e)] * likelihood(env, e, child.observation);
          }
          walk(child, child_weights, lengths);
        }
      };

  walk(plan.root(), std::vector<double>(static_cast<std::size_t>(num_states), 1.0),
       std::vector<double>(static_cast<std::size_t>(plan.num_agents), 0.0));
  return total;
}

} // namespace morrt
