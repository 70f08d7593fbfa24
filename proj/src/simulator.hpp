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

#ifndef MORRT_SIMULATOR_HPP_
#define MORRT_SIMULATOR_HPP_

#include <cstdint>
#include <vector>

#include "cost.hpp"
#include "environment.hpp"
#include "rng.hpp"

namespace morrt {

/// One executed mission: the branch chain selected by the drawn observations,
/// the concatenated per-agent waypoints, and the realized cost under the true
/// environment state.
struct MissionTrace {
  int true_state = -1;
  std::vector<int> observations;
  std::vector<std::vector<Point2>> visited; // per agent, junction points deduplicated
  double realized_cost = 0.0;
  std::vector<int> branch_ids;
};

/// Aggregate of repeated missions. std_error is the sample standard deviation
/// of realized costs divided by sqrt(n_runs).
struct McSummary {
  int n_runs = 0;
  double mean_cost = 0.0;
  double std_error = 0.0;
  std::vector<long long> per_state_counts;
};

/// Walks the plan: at every observing branch end one shared observation is
/// drawn and broadcast, selecting the child branch to continue in. Stage
/// costs accumulate along all traversed edges; each agent pays the terminal
/// cost at its final position under the true state.
MissionTrace run_mission(const PlanTree& plan, const EnvModel& env, const CostParams& costs,
                         int true_state, Rng& rng);

/// Runs n_runs missions with per-run streams derived from `seed`, sampling
/// the true state from b0 (or pinning it to forced_state when >= 0). When
/// `traces` is non-null every mission trace is appended to it.
McSummary monte_carlo(const PlanTree& plan, const EnvModel& env, const CostParams& costs,
                      const BeliefVector& b0, int n_runs, std::uint64_t seed,
                      int forced_state = -1, std::vector<MissionTrace>* traces = nullptr);

} // namespace morrt

#endif // MORRT_SIMULATOR_HPP_
