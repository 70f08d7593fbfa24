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

#ifndef MORRT_SVG_RENDER_HPP_
#define MORRT_SVG_RENDER_HPP_

#include <string>

#include "cost.hpp"
#include "scenario.hpp"

namespace morrt {

/// Standalone SVG of a plan over its world: obstacles dark, observation
/// areas blue, goal nodes as squares, one polyline per (branch, agent)
/// colored by branch id, and a legend mapping colors to observation vectors.
/// Deterministic bytes for identical inputs.
std::string render_svg_text(const PlanTree& plan, const Scenario& scenario);

void render_svg(const PlanTree& plan, const Scenario& scenario, const std::string& out_path);

} // namespace morrt

#endif // MORRT_SVG_RENDER_HPP_
