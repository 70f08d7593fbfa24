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

#ifndef MORRT_ENVIRONMENT_HPP_
#define MORRT_ENVIRONMENT_HPP_

#include <vector>

#include "geometry.hpp"
#include "rng.hpp"

namespace morrt {

/// Hidden-environment model: the target sits at one of `num_states` goal
/// nodes. Agents entering an observation area receive a measurement of the
/// state index that is correct with probability `accuracy`; wrong labels are
/// uniform over the remaining states. The target never moves, so there is no
/// transition model. One observation label exists per state.
struct EnvModel {
  int num_states = 0;
  std::vector<Point2> goal_nodes;        // one per state
  std::vector<Region> observation_areas; // pairwise disjoint
  double accuracy = 1.0;

  int area_containing(Point2 p) const {
    for (std::size_t i = 0; i < observation_areas.size(); ++i) {
      if (point_in_region(p, observation_areas[i])) return static_cast<int>(i);
    }
    return -1;
  }
};

/// Normalized posterior over environment states; entries sum to 1.
struct BeliefVector {
  std::vector<double> probs;
};

/// Bayes-product weights that are never renormalized. The total mass equals
/// the probability of the observation sequence that produced them, which is
/// what makes branch-weighted cost sums exact expectations.
struct UnnormalizedBelief {
  std::vector<double> weights;

  double mass() const {
    double total = 0.0;
    for (double w : weights) total += w;
    return total;
  }
};

inline UnnormalizedBelief as_unnormalized(const BeliefVector& b) { return {b.probs}; }

/// P(o | e, x) for a position inside an observation area. Throws
/// std::invalid_argument when x lies outside every area; callers gate
/// observations on area membership.
double observation_likelihood(const EnvModel& model, int state, int observation, Point2 x);

/// Diagonal of the GxG observation matrix for observation `o` at position x:
/// entry e is observation_likelihood(model, e, o, x).
std::vector<double> theta_matrix(const EnvModel& model, int observation, Point2 x);

/// Elementwise product of v with the theta diagonal. Never normalizes.
/// Throws std::domain_error when the result is identically zero (a
/// deterministic model contradicted an impossible observation).
UnnormalizedBelief update_unnormalized(const UnnormalizedBelief& v, const EnvModel& model,
                                       int observation, Point2 x);

/// weights / sum(weights). Throws std::domain_error on zero mass.
BeliefVector normalize(const UnnormalizedBelief& v);

/// Draws o with probability P(o | true_state, x). x must be in an area.
int sample_observation(const EnvModel& model, int true_state, Point2 x, Rng& rng);

} // namespace morrt

#endif // MORRT_ENVIRONMENT_HPP_
