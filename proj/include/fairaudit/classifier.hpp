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

#ifndef FAIRAUDIT_CLASSIFIER_HPP_
#define FAIRAUDIT_CLASSIFIER_HPP_

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fairaudit/dataset.hpp"
#include "fairaudit/power.hpp"
#include "fairaudit/rational.hpp"

namespace fairaudit {

// A stochastic prediction: one exact probability per label id, summing to 1.
struct StochasticPrediction {
  std::vector<Rational> probs;

  // Throws std::invalid_argument unless the entries sum to exactly 1.
  void validate(std::size_t label_count) const;
};

// A classifier under audit. Predictions are represented by their conditional
// output distribution rather than by sampling, so accuracies come out in
// closed form with no Monte Carlo error.
//
// Contract: the output may depend only on the revealed feature values — two
// masked vectors with equal revealed sets and equal revealed values must get
// equal predictions. The accuracy computation relies on this.
struct ClassifierUnderTest {
  std::string name;
  std::function<StochasticPrediction(const Dataset&, const MaskedVector&)> predict;
  // Whether predict may be invoked from several threads at once. The checks
  // in this library are sequential per classifier, so this is advisory.
  bool thread_safe = true;
};

// The most probable label given the values revealed by mv; ties break toward
// the smallest label id so runs are reproducible.
LabelId optimal_predict(const Dataset& ds, const MaskedVector& mv);

// Wraps optimal_predict as a deterministic ClassifierUnderTest. Its accuracy
// equals the predictive power of the revealed set for every point.
ClassifierUnderTest optimal_classifier();

// Probability that clf's prediction for mv equals the true label, over the
// empirical conditional label distribution of mv's projection group:
// sum_c predicted(c) * empirical(c), computed exactly.
Rational prediction_accuracy(const Dataset& ds, const ClassifierUnderTest& clf,
                             const MaskedVector& mv);

// The stochastic demo classifier for the bundled 4-point, 2-feature dataset
// (labels "+"/"-", numeric-looking tokens). It picks a threshold rule from
// the revealed feature set, then flips the answer with fixed confidence:
//   {f1,f2}: predict "+" iff f2-f1 >= 2, confidence 4/5
//   {f1}:    predict "-" iff f1 >= 1,    confidence 3/4
//   {f2}:    predict "+" iff f2 >= 2,    confidence 3/4
//   {}:      uniform coin
// Note: the rule for the {f2} case thresholds on f2, the value actually
// revealed; a formulation thresholding on f1 there would peek at a hidden
// feature, which the ClassifierUnderTest contract forbids. Throws on any
// dataset that does not look like the fixture (wrong arity, labels, or
// non-numeric tokens).
ClassifierUnderTest appendix_b_classifier();

// Draws a concrete label from a stochastic prediction. Demonstration helper
// only; every check in the library uses the closed-form accuracy instead.
LabelId sample_label(const StochasticPrediction& prediction, std::mt19937& rng);

}  // namespace fairaudit

#endif  // FAIRAUDIT_CLASSIFIER_HPP_
