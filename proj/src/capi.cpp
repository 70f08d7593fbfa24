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

#include "morrt/morrt.h"

#include <cstring>
#include <string>

#include "errors.hpp"
#include "morrt_tree.hpp"
#include "oracle.hpp"
#include "plan_dp.hpp"
#include "plan_io.hpp"
#include "scenario_io.hpp"
#include "simulator.hpp"
#include "svg_render.hpp"

struct morrt_scenario_t {
  morrt::Scenario scenario;
};

struct morrt_plan_t {
  morrt::PlanFile file;
};

namespace {

thread_local std::string g_last_error;

morrt_status fail(morrt_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Exceptions never cross the C boundary; they become status codes here.
template <typename Fn>
morrt_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return MORRT_OK;
  } catch (const morrt::ValidationError& e) {
    return fail(MORRT_ERROR_VALIDATION, e.what());
  } catch (const morrt::IoError& e) {
    return fail(MORRT_ERROR_VALIDATION, e.what());
  } catch (const morrt::PlanningError& e) {
    return fail(MORRT_ERROR_PLANNING, e.what());
  } catch (const std::exception& e) {
    return fail(MORRT_ERROR_PLANNING, e.what());
  } catch (...) {
    return fail(MORRT_ERROR_PLANNING, "unknown error");
  }
}

morrt_status build_impl(const morrt_scenario_t* scenario, uint64_t seed, morrt_plan_t** out) {
  if (scenario == nullptr || out == nullptr) {
    return fail(MORRT_ERROR_USAGE, "scenario and out must be non-null");
  }
  *out = nullptr;
  return guarded([&] {
    morrt::MorrtParams params = scenario->scenario.params;
    params.seed = seed;
    const morrt::MorrtTree tree = morrt::build_morrt(scenario->scenario, params);
    morrt::PlanFile file;
    file.plan = morrt::best_plan(tree, scenario->scenario.initial_belief, scenario->scenario.env,
                                 scenario->scenario.costs);
    file.seed = seed;
    file.expected_cost = morrt::plan_expected_cost(file.plan, scenario->scenario.costs);
    file.scenario_name = scenario->scenario.name;
    *out = new morrt_plan_t{std::move(file)};
  });
}

} // namespace

extern "C" {

const char* morrt_version(void) { return "0.1.0"; }

const char* morrt_last_error(void) { return g_last_error.c_str(); }

morrt_status morrt_scenario_load(const char* path, morrt_scenario_t** out) {
  if (path == nullptr || out == nullptr) {
    return fail(MORRT_ERROR_USAGE, "path and out must be non-null");
  }
  *out = nullptr;
  return guarded([&] { *out = new morrt_scenario_t{morrt::load_scenario(path)}; });
}

morrt_status morrt_scenario_from_json(const char* json_text, morrt_scenario_t** out) {
  if (json_text == nullptr || out == nullptr) {
    return fail(MORRT_ERROR_USAGE, "json_text and out must be non-null");
  }
  *out = nullptr;
  return guarded([&] { *out = new morrt_scenario_t{morrt::scenario_from_json_text(json_text)}; });
}

void morrt_scenario_free(morrt_scenario_t* scenario) { delete scenario; }

int morrt_scenario_num_agents(const morrt_scenario_t* scenario) {
  return scenario == nullptr ? 0 : scenario->scenario.num_agents();
}

int morrt_scenario_num_states(const morrt_scenario_t* scenario) {
  return scenario == nullptr ? 0 : scenario->scenario.env.num_states;
}

uint64_t morrt_scenario_seed(const morrt_scenario_t* scenario) {
  return scenario == nullptr ? 0 : scenario->scenario.params.seed;
}

morrt_status morrt_plan_build(const morrt_scenario_t* scenario, morrt_plan_t** out) {
  if (scenario == nullptr) return fail(MORRT_ERROR_USAGE, "scenario must be non-null");
  return build_impl(scenario, scenario->scenario.params.seed, out);
}

morrt_status morrt_plan_build_seeded(const morrt_scenario_t* scenario, uint64_t seed,
                                     morrt_plan_t** out) {
  return build_impl(scenario, seed, out);
}

void morrt_plan_free(morrt_plan_t* plan) { delete plan; }

morrt_status morrt_plan_expected_cost(const morrt_plan_t* plan, double* out) {
  if (plan == nullptr || out == nullptr) {
    return fail(MORRT_ERROR_USAGE, "plan and out must be non-null");
  }
  *out = plan->file.expected_cost;
  return MORRT_OK;
}

int morrt_plan_num_branches(const morrt_plan_t* plan) {
  return plan == nullptr ? 0 : static_cast<int>(plan->file.plan.branches.size());
}

morrt_status morrt_plan_save(const morrt_plan_t* plan, const char* path) {
  if (plan == nullptr || path == nullptr) {
    return fail(MORRT_ERROR_USAGE, "plan and path must be non-null");
  }
  return guarded([&] { morrt::save_plan(plan->file, path); });
}

morrt_status morrt_plan_load(const char* path, morrt_plan_t** out) {
  if (path == nullptr || out == nullptr) {
    return fail(MORRT_ERROR_USAGE, "path and out must be non-null");
  }
  *out = nullptr;
  return guarded([&] { *out = new morrt_plan_t{morrt::load_plan(path)}; });
}

morrt_status morrt_plan_render_svg(const morrt_plan_t* plan, const morrt_scenario_t* scenario,
                                   const char* path) {
  if (plan == nullptr || scenario == nullptr || path == nullptr) {
    return fail(MORRT_ERROR_USAGE, "plan, scenario, and path must be non-null");
  }
  return guarded([&] { morrt::render_svg(plan->file.plan, scenario->scenario, path); });
}

morrt_status morrt_simulate(const morrt_plan_t* plan, const morrt_scenario_t* scenario,
                            int n_runs, int true_state, uint64_t seed, const char* trace_path,
                            double* mean_cost, double* std_error, long long* state_counts) {
  if (plan == nullptr || scenario == nullptr) {
    return fail(MORRT_ERROR_USAGE, "plan and scenario must be non-null");
  }
  if (n_runs < 1) return fail(MORRT_ERROR_USAGE, "n_runs must be at least 1");
  const morrt::Scenario& s = scenario->scenario;
  if (plan->file.plan.num_agents != s.num_agents() ||
      plan->file.plan.num_observations != s.env.num_states) {
    return fail(MORRT_ERROR_VALIDATION, "plan and scenario disagree on agents or states");
  }
  if (true_state >= s.env.num_states) {
    return fail(MORRT_ERROR_USAGE, "true_state out of range");
  }
  return guarded([&] {
    std::vector<morrt::MissionTrace> traces;
    const morrt::McSummary summary = morrt::monte_carlo(
        plan->file.plan, s.env, s.costs, s.initial_belief, n_runs,
        seed != 0 ? seed : s.params.seed, true_state,
        trace_path != nullptr ? &traces : nullptr);
    if (trace_path != nullptr) morrt::save_traces(traces, trace_path);
    if (mean_cost != nullptr) *mean_cost = summary.mean_cost;
    if (std_error != nullptr) *std_error = summary.std_error;
    if (state_counts != nullptr) {
      for (int e = 0; e < s.env.num_states; ++e) {
        state_counts[e] = summary.per_state_counts[static_cast<std::size_t>(e)];
      }
    }
  });
}

morrt_status morrt_oracle_best_cost(const morrt_scenario_t* scenario, double* out_cost) {
  if (scenario == nullptr || out_cost == nullptr) {
    return fail(MORRT_ERROR_USAGE, "scenario and out_cost must be non-null");
  }
  return guarded([&] {
    const morrt::MorrtTree tree = morrt::build_morrt(scenario->scenario);
    const morrt::OracleResult result =
        morrt::enumerate_best(tree, scenario->scenario.initial_belief, scenario->scenario.env,
                              scenario->scenario.costs);
    *out_cost = result.cost;
  });
}

} // extern "C"
