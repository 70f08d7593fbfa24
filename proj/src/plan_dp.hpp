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

#ifndef MORRT_PLAN_DP_HPP_
#define MORRT_PLAN_DP_HPP_

#include "cost.hpp"
#include "morrt_tree.hpp"

namespace morrt {

/// Result of committing to fixed paths in one level: per agent, the tree
/// node whose root-to-node path minimizes the belief-weighted stage plus
/// terminal cost, chosen independently per agent.
struct NoBranchChoice {
  std::vector<int> node_per_agent;
  double cost = 0.0;
};

/// Scans every node of every agent tree; ties go to the lower node index.
NoBranchChoice best_no_branch(const MultiRrt& multi, const UnnormalizedBelief& v,
                              const CostParams& costs);

/// Backward dynamic program over the tree of RRTs: for every observation
/// history it weighs committing to the best fixed paths against paying the
/// way to a joint observation node and branching per observation, and
/// assembles the minimum-expected-cost contingent plan. Ties prefer not
/// branching.
PlanTree best_plan(const MorrtTree& morrt, const BeliefVector& b0, const EnvModel& env,
                   const CostParams& costs);

/// Recomputes every branch's unnormalized belief from the root belief by the
/// observation-product recursion. Idempotent. Impossible observations under a
/// deterministic model leave an all-zero weight vector, which contributes
/// nothing to expected cost.
void realize_branch_weights(PlanTree& plan, const BeliefVector& b0, const EnvModel& env);

} // namespace morrt

#endif // MORRT_PLAN_DP_HPP_
