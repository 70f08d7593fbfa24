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

// Command-line front end. Talks to the planner exclusively through the C API
// of the shared library.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morrt/morrt.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitPlanning = 3;

int exit_code_for(morrt_status status) {
  switch (status) {
    case MORRT_OK:
      return kExitOk;
    case MORRT_ERROR_USAGE:
      return kExitUsage;
    case MORRT_ERROR_VALIDATION:
      return kExitValidation;
    default:
      return kExitPlanning;
  }
}

int report(morrt_status status) {
  if (status != MORRT_OK) std::fprintf(stderr, "error: %s\n", morrt_last_error());
  return exit_code_for(status);
}

using ScenarioPtr = std::unique_ptr<morrt_scenario_t, decltype(&morrt_scenario_free)>;
using PlanPtr = std::unique_ptr<morrt_plan_t, decltype(&morrt_plan_free)>;

ScenarioPtr load_scenario_or_null(const std::string& path, morrt_status& status) {
  morrt_scenario_t* raw = nullptr;
  status = morrt_scenario_load(path.c_str(), &raw);
  return ScenarioPtr(raw, &morrt_scenario_free);
}

// --seed flag wins, then MORRT_SEED, then the scenario file's seed.
std::uint64_t resolve_seed(const morrt_scenario_t* scenario, bool seed_set, std::uint64_t seed) {
  if (seed_set) return seed;
  if (const char* env = std::getenv("MORRT_SEED"); env != nullptr && *env != '\0') {
    return std::strtoull(env, nullptr, 10);
  }
  return morrt_scenario_seed(scenario);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"morrt: contingent mission planning for multi-agent search"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string plan_path;
  std::string out_path;
  std::string svg_path;
  std::string trace_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int runs = 10000;
  int true_state = -1;

  CLI::App* cmd_plan = app.add_subcommand("plan", "build the plan with lowest expected cost");
  cmd_plan->add_option("scenario", scenario_path, "scenario JSON file")->required();
  cmd_plan->add_option("--out", out_path, "write the plan file here");
  cmd_plan->add_option("--svg", svg_path, "render the plan as SVG here");
  cmd_plan->add_option("--seed", seed, "override the scenario seed")
      ->each([&seed_set](const std::string&) { seed_set = true; });

  CLI::App* cmd_sim = app.add_subcommand("simulate", "Monte Carlo execution of a saved plan");
  cmd_sim->add_option("plan", plan_path, "plan JSON file")->required();
  cmd_sim->add_option("scenario", scenario_path, "scenario JSON file")->required();
  cmd_sim->add_option("--runs", runs, "number of missions")->check(CLI::PositiveNumber);
  cmd_sim->add_option("--true-e", true_state, "pin the hidden state instead of sampling it");
  cmd_sim->add_option("--trace", trace_path, "write all mission traces here");
  cmd_sim->add_option("--seed", seed, "override the scenario seed")
      ->each([&seed_set](const std::string&) { seed_set = true; });

  CLI::App* cmd_oracle =
      app.add_subcommand("oracle", "exhaustive optimum for small instances (cross-check)");
  cmd_oracle->add_option("scenario", scenario_path, "scenario JSON file")->required();

  CLI::App* cmd_validate = app.add_subcommand("validate", "check scenario invariants only");
  cmd_validate->add_option("scenario", scenario_path, "scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  morrt_status status = MORRT_OK;

  if (cmd_validate->parsed()) {
    ScenarioPtr scenario = load_scenario_or_null(scenario_path, status);
    if (status != MORRT_OK) return report(status);
    std::printf("ok: %d agent(s), %d environment state(s)\n",
                morrt_scenario_num_agents(scenario.get()),
                morrt_scenario_num_states(scenario.get()));
    return kExitOk;
  }

  if (cmd_plan->parsed()) {
    ScenarioPtr scenario = load_scenario_or_null(scenario_path, status);
    if (status != MORRT_OK) return report(status);
    const std::uint64_t use_seed = resolve_seed(scenario.get(), seed_set, seed);

    morrt_plan_t* raw_plan = nullptr;
    status = morrt_plan_build_seeded(scenario.get(), use_seed, &raw_plan);
    if (status != MORRT_OK) return report(status);
    PlanPtr plan(raw_plan, &morrt_plan_free);

    double cost = 0.0;
    morrt_plan_expected_cost(plan.get(), &cost);
    std::printf("seed: %llu\n", static_cast<unsigned long long>(use_seed));
    std::printf("branches: %d\n", morrt_plan_num_branches(plan.get()));
    std::printf("expected cost: %.9f\n", cost);

    if (!out_path.empty()) {
      status = morrt_plan_save(plan.get(), out_path.c_str());
      if (status != MORRT_OK) return report(status);
      std::printf("plan written to %s\n", out_path.c_str());
    }
    if (!svg_path.empty()) {
      status = morrt_plan_render_svg(plan.get(), scenario.get(), svg_path.c_str());
      if (status != MORRT_OK) return report(status);
      std::printf("svg written to %s\n", svg_path.c_str());
    }
    return kExitOk;
  }

  if (cmd_sim->parsed()) {
    morrt_plan_t* raw_plan = nullptr;
    status = morrt_plan_load(plan_path.c_str(), &raw_plan);
    if (status != MORRT_OK) return report(status);
    PlanPtr plan(raw_plan, &morrt_plan_free);

    ScenarioPtr scenario = load_scenario_or_null(scenario_path, status);
    if (status != MORRT_OK) return report(status);

    const std::uint64_t use_seed = resolve_seed(scenario.get(), seed_set, seed);
    const int num_states = morrt_scenario_num_states(scenario.get());
    std::vector<long long> counts(static_cast<std::size_t>(num_states), 0);
    double mean = 0.0;
    double std_error = 0.0;
    status = morrt_simulate(plan.get(), scenario.get(), runs, true_state, use_seed,
                            trace_path.empty() ? nullptr : trace_path.c_str(), &mean, &std_error,
                            counts.data());
    if (status != MORRT_OK) return report(status);

    double planned = 0.0;
    morrt_plan_expected_cost(plan.get(), &planned);
    std::printf("runs: %d\n", runs);
    std::printf("mean cost: %.9f\n", mean);
    std::printf("std error: %.9f\n", std_error);
    std::printf("plan expected cost: %.9f\n", planned);
    for (int e = 0; e < num_states; ++e) {
      std::printf("state %d missions: %lld\n", e, counts[static_cast<std::size_t>(e)]);
    }
    if (!trace_path.empty()) std::printf("traces written to %s\n", trace_path.c_str());
    return kExitOk;
  }

  if (cmd_oracle->parsed()) {
    ScenarioPtr scenario = load_scenario_or_null(scenario_path, status);
    if (status != MORRT_OK) return report(status);
    double cost = 0.0;
    status = morrt_oracle_best_cost(scenario.get(), &cost);
    if (status != MORRT_OK) return report(status);
    std::printf("oracle optimum: %.9f\n", cost);
    return kExitOk;
  }

  return kExitUsage;
}
