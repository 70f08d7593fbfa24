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

#include "environment.hpp"

#include <stdexcept>

namespace morrt {

namespace {

void require_in_area(const EnvModel& model, Point2 x) {
  if (model.area_containing(x) < 0) {
    throw std::invalid_argument("no observation possible here: position outside every area");
  }
}

} // namespace

double observation_likelihood(const EnvModel& model, int state, int observation, Point2 x) {
  if (state < 0 || state >= model.num_states || observation < 0 ||
      observation >= model.num_states) {
    throw std::invalid_argument("state or observation index out of range");
  }
  require_in_area(model, x);
  if (model.num_states == 1) return 1.0;
  if (observation == state) return model.accuracy;
  return (1.0 - model.accuracy) / static_cast<double>(model.num_states - 1);
}

std::vector<double> theta_matrix(const EnvModel& model, int observation, Point2 x) {
  std::vector<double> diag(static_cast<std::size_t>(model.num_states));
  for (int e = 0; e < model.num_states; ++e) {
    diag[static_cast<std::size_t>(e)] = observation_likelihood(model, e, observation, x);
  }
  return diag;
}

UnnormalizedBelief update_unnormalized(const UnnormalizedBelief& v, const EnvModel& model,
                                       int observation, Point2 x) {
  const std::vector<double> diag = theta_matrix(model, observation, x);
  UnnormalizedBelief out;
  out.weights.resize(v.weights.size());
  bool any_positive = false;
  for (std::size_t e = 0; e < v.weights.size(); ++e) {
    out.weights[e] = diag[e] * v.weights[e];
    if (out.weights[e] > 0.0) any_positive = true;
  }
  if (!any_positive) throw std::domain_error("impossible observation: updated belief is zero");
  return out;
}

BeliefVector normalize(const UnnormalizedBelief& v) {
  const double total = v.mass();
  if (!(total > 0.0)) throw std::domain_error("cannot normalize zero-mass belief");
  BeliefVector b;
  b.probs.resize(v.weights.size());
  for (std::size_t e = 0; e < v.weights.size(); ++e) b.probs[e] = v.weights[e] / total;
  return b;
}

int sample_observation(const EnvModel& model, int true_state, Point2 x, Rng& rng) {
  std::vector<double> row(static_cast<std::size_t>(model.num_states));
  for (int o = 0; o < model.num_states; ++o) {
    row[static_cast<std::size_t>(o)] = observation_likelihood(model, true_state, o, x);
  }
  return rng.pick_weighted(row);
}

} // namespace morrt
