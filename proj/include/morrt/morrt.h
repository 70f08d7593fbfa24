/* Copyright 2026 The morrt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the morrt shared library: observation-contingent mission
 * planning for multi-agent search, plan selection by dynamic programming,
 * and Monte Carlo validation. All objects are opaque handles owned by the
 * library; every fallible call returns a morrt_status and leaves a
 * human-readable message in morrt_last_error() on failure.
 */

#ifndef MORRT_MORRT_H_
#define MORRT_MORRT_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(MORRT_BUILD)
#define MORRT_API __declspec(dllexport)
#else
#define MORRT_API __declspec(dllimport)
#endif
#else
#define MORRT_API __attribute__((visibility("default")))
#endif

typedef enum morrt_status {
  MORRT_OK = 0,
  MORRT_ERROR_USAGE = 1,      /* bad arguments to an API call */
  MORRT_ERROR_VALIDATION = 2, /* unreadable/invalid scenario or plan file */
  MORRT_ERROR_PLANNING = 3,   /* planning, simulation, or output failure */
} morrt_status;

typedef struct morrt_scenario_t morrt_scenario_t;
typedef struct morrt_plan_t morrt_plan_t;

MORRT_API const char* morrt_version(void);

/* Message for the most recent failure on this thread; empty string if none.
 * Valid until the next failing call on the same thread. */
MORRT_API const char* morrt_last_error(void);

/* ---- scenarios ---- */

MORRT_API morrt_status morrt_scenario_load(const char* path, morrt_scenario_t** out);
MORRT_API morrt_status morrt_scenario_from_json(const char* json_text, morrt_scenario_t** out);
MORRT_API void morrt_scenario_free(morrt_scenario_t* scenario);

MORRT_API int morrt_scenario_num_agents(const morrt_scenario_t* scenario);
MORRT_API int morrt_scenario_num_states(const morrt_scenario_t* scenario);
MORRT_API uint64_t morrt_scenario_seed(const morrt_scenario_t* scenario);

/* ---- planning ---- */

/* Builds the tree of RRTs and selects the minimum-expected-cost contingent
 * plan. morrt_plan_build uses the scenario's own seed. */
MORRT_API morrt_status morrt_plan_build(const morrt_scenario_t* scenario, morrt_plan_t** out);
MORRT_API morrt_status morrt_plan_build_seeded(const morrt_scenario_t* scenario, uint64_t seed,
                                               morrt_plan_t** out);
MORRT_API void morrt_plan_free(morrt_plan_t* plan);

MORRT_API morrt_status morrt_plan_expected_cost(const morrt_plan_t* plan, double* out);
MORRT_API int morrt_plan_num_branches(const morrt_plan_t* plan);

MORRT_API morrt_status morrt_plan_save(const morrt_plan_t* plan, const char* path);
MORRT_API morrt_status morrt_plan_load(const char* path, morrt_plan_t** out);

/* Renders the plan over the scenario world as a standalone SVG. */
MORRT_API morrt_status morrt_plan_render_svg(const morrt_plan_t* plan,
                                             const morrt_scenario_t* scenario, const char* path);

/* ---- simulation ---- */

/* Executes the plan n_runs times. true_state pins the hidden state, or pass
 * -1 to sample it from the scenario's initial belief. Pass 0 as seed to use
 * the scenario seed. state_counts, when non-NULL, must hold num_states
 * entries. trace_path, when non-NULL, receives every mission trace as JSON.
 */
MORRT_API morrt_status morrt_simulate(const morrt_plan_t* plan, const morrt_scenario_t* scenario,
                                      int n_runs, int true_state, uint64_t seed,
                                      const char* trace_path, double* mean_cost,
                                      double* std_error, long long* state_counts);

/* ---- exhaustive cross-check ---- */

/* Exact minimum expected cost over every contingent plan in the tree of
 * RRTs, computed by direct expectation. Rejects large instances. */
MORRT_API morrt_status morrt_oracle_best_cost(const morrt_scenario_t* scenario, double* out_cost);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MORRT_MORRT_H_ */
