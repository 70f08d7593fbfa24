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

#ifndef MORRT_PLAN_IO_HPP_
#define MORRT_PLAN_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cost.hpp"
#include "simulator.hpp"

namespace morrt {

/// A plan plus run metadata. Serialization is deterministic: the same plan
/// produces byte-identical files.
struct PlanFile {
  PlanTree plan;
  std::uint64_t seed = 0;
  double expected_cost = 0.0;
  std::string scenario_name;
};

std::string plan_to_json_text(const PlanFile& file);
void save_plan(const PlanFile& file, const std::string& path);

/// Throws IoError when unreadable, ValidationError when the structure is not
/// a well-formed contingent plan.
PlanFile load_plan(const std::string& path);
PlanFile plan_from_json_text(const std::string& text, const std::string& origin = "<string>");

std::string traces_to_json_text(const std::vector<MissionTrace>& traces);
void save_traces(const std::vector<MissionTrace>& traces, const std::string& path);

} // namespace morrt

#endif // MORRT_PLAN_IO_HPP_
