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

#include "plan_dp.hpp"

#include <cmath>
#include <utility>

namespace morrt {

namespace {

constexpr double kBeliefMergeTol = 1e-12;

// Observation likelihoods inside an area depend on position only through
// membership, so the diagonal of the observation matrix needs (o, p, G) alone.
std::vector<double> theta_diag(const EnvModel& env, int observation) {
  std::vector<double> diag(static_cast<std::size_t>(env.num_states));
  for (int e = 0; e < env.num_states; ++e) {
    if (env.num_states == 1) {
      diag[static_cast<std::size_t>(e)] = 1.0;
    } else if (e == observation) {
      diag[static_cast<std::size_t>(e)] = env.accuracy;
    } else {
      diag[static_cast<std::size_t>(e)] =
          (1.0 - env.accuracy) / static_cast<double>(env.num_states - 1);
    }
  }
  return diag;
}

std::vector<double> apply_theta(const std::vector<double>& v, const std::vector<double>& diag) {
  std::vector<double> out(v.size());
  for (std::size_t e = 0; e < v.size(); ++e) out[e] = diag[e] * v[e];
  return out;
}

// Root-to-node path length for every node, by one pass over the node list
// (children always follow their parent).
std::vector<double> cumulative_lengths(const AgentTree& tree) {
  std::vector<double> cum(tree.nodes.size(), 0.0);
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    const TreeNode& n = tree.nodes[i];
    cum[i] = cum[static_cast<std::size_t>(n.parent)] +
             distance(tree.nodes[static_cast<std::size_t>(n.parent)].pos, n.pos);
  }
  return cum;
}

struct DpAction {
  bool branch = false;
  std::vector<int> end_nodes; // per agent, when not branching
  int joint = -1;             // joint node index, when branching
};

struct DpEntry {
  std::vector<double> v;
  double cost = 0.0;
  DpAction action;
};

class DpSolver {
 public:
  DpSolver(const MorrtTree& morrt, const EnvModel& env, const CostParams& costs)
      : morrt_(morrt), env_(env), costs_(costs), memo_(morrt.nodes.size()) {
    path_length_.reserve(morrt.nodes.size());
    for (const MorrtNode& node : morrt.nodes) {
      std::vector<std::vector<double>> per_tree;
      per_tree.reserve(node.multi.trees.size());
      for (const AgentTree& tree : node.multi.trees) per_tree.push_back(cumulative_lengths(tree));
      path_length_.push_back(std::move(per_tree));
    }
    theta_.reserve(static_cast<std::size_t>(env.num_states));
    for (int o = 0; o < env.num_states; ++o) theta_.push_back(theta_diag(env, o));
  }

  const DpEntry& solve(int node_id, const std::vector<double>& v) {
    auto& entries = memo_[static_cast<std::size_t>(node_id)];
    for (const DpEntry& entry : entries) {
      if (same_belief(entry.v, v)) return entry;
    }

    const MorrtNode& node = morrt_.nodes[static_cast<std::size_t>(node_id)];
    DpEntry entry;
    entry.v = v;

    const NoBranchChoice no_branch = best_no_branch_weighted(node_id, v);
    entry.cost = no_branch.cost;
    entry.action.branch = false;
    entry.action.end_nodes = no_branch.node_per_agent;

    double mass = 0.0;
    for (double w : v) mass += w;

    for (std::size_t j = 0; j < node.multi.joint_obs_nodes.size(); ++j) {
      const JointObservationNode& joint = node.multi.joint_obs_nodes[j];
      const int child_id = node.joint_children[j];

      double branch_cost = 0.0;
      for (std::size_t a = 0; a < node.multi.trees.size(); ++a) {
        branch_cost += mass * costs_.stage_weight *
                       path_length_[static_cast<std::size_t>(node_id)][a]
                                   [static_cast<std::size_t>(joint.per_agent[a].node)];
      }
      for (int o = 0; o < env_.num_states; ++o) {
        const std::vector<double> child_v =
            apply_theta(v, theta_[static_cast<std::size_t>(o)]);
        branch_cost += solve(child_id, child_v).cost;
      }
      if (branch_cost < entry.cost) { // ties prefer not branching
        entry.cost = branch_cost;
        entry.action.branch = true;
        entry.action.joint = static_cast<int>(j);
      }
    }

    entries.push_back(std::move(entry));
    return entries.back();
  }

  NoBranchChoice best_no_branch_weighted(int node_id, const std::vector<double>& v) const {
    const MorrtNode& node = morrt_.nodes[static_cast<std::size_t>(node_id)];
    NoBranchChoice choice;
    double mass = 0.0;
    for (double w : v) mass += w;
    for (std::size_t a = 0; a < node.multi.trees.size(); ++a) {
      const AgentTree& tree = node.multi.trees[a];
      const std::vector<double>& cum = path_length_[static_cast<std::size_t>(node_id)][a];
      int best_node = 0;
      double best_cost = agent_node_cost(tree, 0, cum, v, mass);
      for (std::size_t n = 1; n < tree.nodes.size(); ++n) {
        const double c = agent_node_cost(tree, static_cast<int>(n), cum, v, mass);
        if (c < best_cost) {
          best_cost = c;
          best_node = static_cast<int>(n);
        }
      }
      choice.node_per_agent.push_back(best_node);
      choice.cost += best_cost;
    }
    return choice;
  }

  PlanTree assemble(const std::vector<double>& v0) {
    PlanTree plan;
    plan.num_agents = static_cast<int>(morrt_.nodes.front().multi.trees.size());
    plan.num_observations = env_.num_states;
    emit_branch(plan, 0, v0, -1, -1);
    return plan;
  }

 private:
  bool same_belief(const std::vector<double>& a, const std::vector<double>& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i] - b[i]) > kBeliefMergeTol) return false;
    }
    return true;
  }

  double agent_node_cost(const AgentTree& tree, int n, const std::vector<double>& cum,
                         const std::vector<double>& v, double mass) const {
    double c = mass * costs_.stage_weight * cum[static_cast<std::size_t>(n)];
    for (int e = 0; e < env_.num_states; ++e) {
      c += v[static_cast<std::size_t>(e)] *
           terminal_cost(tree.nodes[static_cast<std::size_t>(n)].pos, e, costs_);
    }
    return c;
  }

  int emit_branch(PlanTree& plan, int node_id, const std::vector<double>& v, int parent_branch,
                  int entry_observation) {
    const DpAction action = solve(node_id, v).action;
    const MorrtNode& node = morrt_.nodes[static_cast<std::size_t>(node_id)];

    PlanBranch branch;
    branch.id = static_cast<int>(plan.branches.size());
    branch.parent = parent_branch;
    branch.observation = entry_observation;
    branch.v.weights = v;
    if (action.branch) {
      const JointObservationNode& joint =
          node.multi.joint_obs_nodes[static_cast<std::size_t>(action.joint)];
      branch.ends_with_observation = true;
      branch.obs_agent = joint.observer;
      branch.obs_area = joint.area;
      for (std::size_t a = 0; a < node.multi.trees.size(); ++a) {
        branch.waypoints.push_back(joint_agent_path(node.multi, joint, static_cast<int>(a)));
      }
    } else {
      for (std::size_t a = 0; a < node.multi.trees.size(); ++a) {
        branch.waypoints.push_back(path_to_node(node.multi.trees[a], action.end_nodes[a]));
      }
    }
    const int branch_id = branch.id;
    plan.branches.push_back(std::move(branch));

    if (action.branch) {
      const int child_id = node.joint_children[static_cast<std::size_t>(action.joint)];
      std::vector<int> children;
      for (int o = 0; o < env_.num_states; ++o) {
        const std::vector<double> child_v = apply_theta(v, theta_[static_cast<std::size_t>(o)]);
        children.push_back(emit_branch(plan, child_id, child_v, branch_id, o));
      }
      plan.branches[static_cast<std::size_t>(branch_id)].children = std::move(children);
    }
    return branch_id;
  }

  const MorrtTree& morrt_;
  const EnvModel& env_;
  const CostParams& costs_;
  std::vector<std::vector<DpEntry>> memo_;                 // per morrt node
  std::vector<std::vector<std::vector<double>>> path_length_; // node -> agent -> tree node
  std::vector<std::vector<double>> theta_;                 // per observation
};

} // namespace

NoBranchChoice best_no_branch(const MultiRrt& multi, const UnnormalizedBelief& v,
                              const CostParams& costs) {
  NoBranchChoice choice;
  const int num_states = static_cast<int>(costs.goal_nodes.size());
  for (const AgentTree& tree : multi.trees) {
    int best_node = 0;
    double best_cost = 0.0;
    bool first = true;
    std::vector<double> cum(tree.nodes.size(), 0.0);
    for (std::size_t n = 1; n < tree.nodes.size(); ++n) {
      cum[n] = cum[static_cast<std::size_t>(tree.nodes[n].parent)] +
               distance(tree.nodes[static_cast<std::size_t>(tree.nodes[n].parent)].pos,
                        tree.nodes[n].pos);
    }
    double mass = 0.0;
    for (double w : v.weights) mass += w;
    for (std::size_t n = 0; n < tree.nodes.size(); ++n) {
      double c = mass * costs.stage_weight * cum[n];
      for (int e = 0; e < num_states; ++e) {
        c += v.weights[static_cast<std::size_t>(e)] * terminal_cost(tree.nodes[n].pos, e, costs);
      }
      if (first || c < best_cost) {
        first = false;
        best_cost = c;
        best_node = static_cast<int>(n);
      }
    }
    choice.node_per_agent.push_back(best_node);
    choice.cost += best_cost;
  }
  return choice;
}

PlanTree best_plan(const MorrtTree& morrt, const BeliefVector& b0, const EnvModel& env,
                   const CostParams& costs) {
  DpSolver solver(morrt, env, costs);
  solver.solve(0, b0.probs);
  return solver.assemble(b0.probs);
}

void realize_branch_weights(PlanTree& plan, const BeliefVector& b0, const EnvModel& env) {
  for (PlanBranch& branch : plan.branches) {
    if (branch.parent < 0) {
      branch.v.weights = b0.probs;
      continue;
    }
    const PlanBranch& parent = plan.branches[static_cast<std::size_t>(branch.parent)];
    const std::vector<double> diag = theta_diag(env, branch.observation);
    branch.v.weights = apply_theta(parent.v.weights, diag);
  }
}

} // namespace morrt
