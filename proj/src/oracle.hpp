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

#ifndef MORRT_ORACLE_HPP_
#define MORRT_ORACLE_HPP_

#include "cost.hpp"
#include "morrt_tree.hpp"

namespace morrt {

struct OracleLimits {
  int max_nodes = 5000;              // total tree nodes across the whole MorrtTree
  int max_depth = 4;                 // levels below the root
  double max_evaluations = 1e7;      // candidate-evaluation budget
};

struct OracleResult {
  double cost = 0.0;
  PlanTree plan;
};

/// Exhaustive minimum over every contingent plan expressible in the
/// MorrtTree. Costs are computed by direct expansion of the expectation over
/// full observation sequences (prior-weighted products of observation
/// likelihoods on realized paths), deliberately not by the branch-weighted
/// reformulation, so the two routes cross-validate. Throws PlanningError
/// ("instance too large for oracle") when the limits are exceeded.
OracleResult enumerate_best(const MorrtTree& morrt, const BeliefVector& b0, const EnvModel& env,
                            const CostParams& costs, const OracleLimits& limits = {});

/// Direct-expectation cost of an existing plan: sum over leaves and states of
/// prior times likelihood products times realized path cost. Independent of
/// the branch-weight route.
double direct_expected_cost(const PlanTree& plan, const EnvModel& env, const BeliefVector& b0,
                            const CostParams& costs);

} // namespace morrt

#endif // MORRT_ORACLE_HPP_
