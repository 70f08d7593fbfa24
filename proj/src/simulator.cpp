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

#include "simulator.hpp"

#include <cmath>

#include "errors.hpp"

namespace morrt {

namespace {

// In-area observation likelihoods are position-independent; the draw only
// needs the confusion row of the true state.
std::vector<double> observation_row(const EnvModel& env, int true_state) {
  std::vector<double> row(static_cast<std::size_t>(env.num_states));
  for (int o = 0; o < env.num_states; ++o) {
    if (env.num_states == 1) {
      row[static_cast<std::size_t>(o)] = 1.0;
    } else if (o == true_state) {
      row[static_cast<std::size_t>(o)] = env.accuracy;
    } else {
      row[static_cast<std::size_t>(o)] =
          (1.0 - env.accuracy) / static_cast<double>(env.num_states - 1);
    }
  }
  return row;
}

} // namespace

MissionTrace run_mission(const PlanTree& plan, const EnvModel& env, const CostParams& costs,
                         int true_state, Rng& rng) {
  MissionTrace trace;
  trace.true_state = true_state;
  trace.visited.resize(static_cast<std::size_t>(plan.num_agents));

  const PlanBranch* branch = &plan.root();
  while (true) {
    trace.branch_ids.push_back(branch->id);
    for (std::size_t a = 0; a < trace.visited.size(); ++a) {
      const auto& wp = branch->waypoints[a];
      std::size_t begin = 0;
      if (!trace.visited[a].empty() && wp.front() == trace.visited[a].back()) begin = 1;
      trace.visited[a].insert(trace.visited[a].end(), wp.begin() + static_cast<long>(begin),
                              wp.end());
      for (std::size_t l = 0; l + 1 < wp.size(); ++l) {
        trace.realized_cost += stage_cost(wp[l], wp[l + 1] - wp[l], true_state, costs);
      }
      if (!branch->ends_with_observation) {
        trace.realized_cost += terminal_cost(wp.back(), true_state, costs);
      }
    }
    if (!branch->ends_with_observation) break;

    const std::vector<double> row = observation_row(env, true_state);
    const int o = rng.pick_weighted(row);
    trace.observations.push_back(o);
    if (o < 0 || o >= static_cast<int>(branch->children.size())) {
      throw PlanningError("plan integrity: no child branch for drawn observation");
    }
    branch = &plan.branches[static_cast<std::size_t>(branch->children[static_cast<std::size_t>(o)])];
  }
  return trace;
}

McSummary monte_carlo(const PlanTree& plan, const EnvModel& env, const CostParams& costs,
                      const BeliefVector& b0, int n_runs, std::uint64_t seed, int forced_state,
                      std::vector<MissionTrace>* traces) {
  McSummary summary;
  summary.n_runs = n_runs;
  summary.per_state_counts.assign(static_cast<std::size_t>(env.num_states), 0);

  std::vector<double> costs_seen;
  costs_seen.reserve(static_cast<std::size_t>(n_runs));
  for (int run = 0; run < n_runs; ++run) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(run)));
    const int true_state = forced_state >= 0 ? forced_state : rng.pick_weighted(b0.probs);
    const MissionTrace trace = run_mission(plan, env, costs, true_state, rng);
    costs_seen.push_back(trace.realized_cost);
    summary.per_state_counts[static_cast<std::size_t>(true_state)] += 1;
    if (traces != nullptr) traces->push_back(trace);
  }

  // Compensated summation keeps the aggregate independent of ordering noise.
  double sum = 0.0;
  double comp = 0.0;
  for (double c : costs_seen) {
    const double y = c - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  summary.mean_cost = sum / static_cast<double>(n_runs);

  double sq = 0.0;
  comp = 0.0;
  for (double c : costs_seen) {
    const double d = c - summary.mean_cost;
    const double y = d * d - comp;
    const double t = sq + y;
    comp = (t - sq) - y;
    sq = t;
  }
  if (n_runs > 1) {
    const double variance = sq / static_cast<double>(n_runs - 1);
    summary.std_error = std::sqrt(variance / static_cast<double>(n_runs));
  }
  return summary;
}

} // namespace morrt
