// Copyright 2026 The Fairaudit Authors
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

#ifndef FAIRAUDIT_PROPERTIES_HPP_
#define FAIRAUDIT_PROPERTIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fairaudit/classifier.hpp"
#include "fairaudit/dataset.hpp"
#include "fairaudit/power.hpp"
#include "fairaudit/rational.hpp"

namespace fairaudit {

enum class CostRegime {
  kFeatureCount,  // every feature costs the same
  kFeatureMatch,  // every subset has a distinct total cost (powers of two)
  kCustom,
};

// Per-feature privacy costs. The named regimes have canonical constructions;
// arbitrary non-negative costs go through custom().
struct CostVector {
  std::vector<Rational> costs;
  CostRegime regime = CostRegime::kCustom;

  static CostVector feature_count(std::size_t d);
  // Costs 2^0 .. 2^(d-1), so subset sums are distinct and equal cost means
  // equal set. Exact arithmetic caps this construction at d <= 64.
  static CostVector feature_match(std::size_t d);
  static CostVector custom(std::vector<Rational> costs);

  Rational total(const FeatureSet& s) const;
};

// sets[i] is the feature set a classifier uses to predict point i.
struct FeatureAssignment {
  std::vector<FeatureSet> sets;
};

// Outcome of one property check. When the property holds, `value` carries the
// common accuracy (fair accuracy) or common cost (fair privacy), and
// `common_set` the shared feature set under the feature-match regime. When it
// fails, the violating_* fields pin down a concrete counterexample. `witness`
// is a rendered summary either way.
struct PropertyVerdict {
  bool holds = false;
  std::optional<Rational> value;
  std::optional<FeatureSet> common_set;
  std::optional<std::size_t> violating_point;
  std::optional<std::size_t> second_point;
  std::optional<FeatureSet> violating_subset;
  std::string witness;
};

// Fair prediction accuracy: every point is predicted with one common accuracy
// gamma, and gamma > 0. Equality is exact.
PropertyVerdict check_fair_accuracy(const Dataset& ds, const ClassifierUnderTest& clf,
                                    const FeatureAssignment& fa);

// Need-to-know: for every point, every proper subset of the assigned set
// (including {}) strictly lowers the prediction accuracy.
PropertyVerdict check_need_to_know(const Dataset& ds, const ClassifierUnderTest& clf,
                                   const FeatureAssignment& fa);

// Fair privacy: the total cost of the assigned features is the same for every
// point. Feature-count compares cardinalities, feature-match compares the
// sets themselves, custom sums the cost vector exactly.
PropertyVerdict check_fair_privacy(const FeatureAssignment& fa, const CostVector& c);

// Whether s admits an optimal non-trivial classifier satisfying all three
// properties: the predictive power of s is one common value over all points,
// and every proper subset has strictly lower power for every point. Throws on
// an empty s.
bool check_condition7(const Dataset& ds, const FeatureSet& s, PowerCache& cache);

// First failure clause: two points with unequal power under s (fair accuracy
// is impossible for an optimal classifier fixed on s).
bool clause1_unequal_power(const Dataset& ds, const FeatureSet& s, PowerCache& cache);

// Second failure clause: some point and proper subset s' with power(s') >=
// power(s) (need-to-know is violated). Subsets are visited in increasing
// cardinality starting at {}; small subsets are the cheapest witnesses.
bool clause2_ntk_violation(const Dataset& ds, const FeatureSet& s, PowerCache& cache);

}  // namespace fairaudit

#endif  // FAIRAUDIT_PROPERTIES_HPP_
