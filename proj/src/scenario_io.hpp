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

#ifndef MORRT_SCENARIO_IO_HPP_
#define MORRT_SCENARIO_IO_HPP_

#include <string>

#include "scenario.hpp"

namespace morrt {

/// Parses and fully validates a scenario. Throws IoError when the file
/// cannot be read, ValidationError listing every schema or invariant
/// violation otherwise.
Scenario load_scenario(const std::string& path);
Scenario scenario_from_json_text(const std::string& text, const std::string& origin = "<string>");

std::string scenario_to_json_text(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::string& path);

} // namespace morrt

#endif // MORRT_SCENARIO_IO_HPP_
