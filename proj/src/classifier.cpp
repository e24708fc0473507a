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

#include "fairaudit/classifier.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fairaudit {
namespace {

LabelDistribution distribution_for(const Dataset& ds, const MaskedVector& mv) {
  if (mv.source >= ds.size()) throw std::out_of_range("masked vector source out of range");
  if (!mv.revealed.empty() && mv.revealed.max_index() >= ds.feature_count()) {
    throw std::out_of_range("masked vector reveals features outside the dataset");
  }
  std::vector<std::size_t> group;
  for (std::size_t j = 0; j < ds.size(); ++j) {
    if (ds.agree(mv.source, j, mv.revealed)) group.push_back(j);
  }
  return conditional_distribution(ds, group);
}

long parse_numeric_token(const std::string& token) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("demo classifier: non-numeric feature token '" + token + "'");
  }
  return value;
}

}  // namespace

void StochasticPrediction::validate(std::size_t label_count) const {
  if (probs.size() != label_count) {
    throw std::invalid_argument("prediction has " + std::to_string(probs.size()) +
                                " entries for " + std::to_string(label_count) + " labels");
  }
  Rational sum;
  for (const Rational& p : probs) sum += p;
  if (!sum.is_one()) {
    throw std::invalid_argument("prediction distribution sums to " + sum.to_string() +
                                ", expected 1");
  }
}

LabelId optimal_predict(const Dataset& ds, const MaskedVector& mv) {
  if (mv.source >= ds.size()) throw std::out_of_range("masked vector source out of range");
  return distribution_for(ds, mv).argmax();
}

ClassifierUnderTest optimal_classifier() {
  ClassifierUnderTest clf;
  clf.name = "optimal";
  clf.predict = [](const Dataset& ds, const MaskedVector& mv) {
    StochasticPrediction prediction;
    prediction.probs.assign(ds.label_count(), Rational());
    prediction.probs[optimal_predict(ds, mv)] = Rational(1, 1);
    return prediction;
  };
  return clf;
}

Rational prediction_accuracy(const Dataset& ds, const ClassifierUnderTest& clf,
                             const MaskedVector& mv) {
  const StochasticPrediction predicted = clf.predict(ds, mv);
  predicted.validate(ds.label_count());
  const LabelDistribution empirical = distribution_for(ds, mv);
  Rational acc;
  for (std::size_t c = 0; c < predicted.probs.size(); ++c) {
    acc += predicted.probs[c] * Rational(empirical.counts[c], empirical.total);
  }
  return acc;
}

ClassifierUnderTest appendix_b_classifier() {
  ClassifierUnderTest clf;
  clf.name = "appendix-b";
  clf.thread_safe = true;
  clf.predict = [](const Dataset& ds, const MaskedVector& mv) {
    if (ds.feature_count() != 2 || ds.label_count() != 2) {
      throw std::invalid_argument(
          "demo classifier requires the 2-feature, 2-label fixture dataset");
    }
    const auto plus = ds.label_id("+");
    const auto minus = ds.label_id("-");
    if (!plus || !minus) {
      throw std::invalid_argument("demo classifier requires labels '+' and '-'");
    }

    auto numeric = [&](std::size_t feature) {
      return parse_numeric_token(ds.value_token(feature, ds.value(mv.source, feature)));
    };

    bool predict_plus;
    Rational confidence;
    const auto& revealed = mv.revealed;
    if (revealed == FeatureSet{0, 1}) {
      predict_plus = numeric(1) - numeric(0) >= 2;
      confidence = Rational(4, 5);
    } else if (revealed == FeatureSet{0}) {
      predict_plus = !(numeric(0) >= 1);
      confidence = Rational(3, 4);
    } else if (revealed == FeatureSet{1}) {
      predict_plus = numeric(1) >= 2;
      confidence = Rational(3, 4);
    } else if (revealed.empty()) {
      StochasticPrediction uniform;
      uniform.probs.assign(2, Rational(1, 2));
      return uniform;
    } else {
      throw std::invalid_argument("demo classifier: unsupported revealed set " +
                                  revealed.to_string());
    }

    StochasticPrediction prediction;
    prediction.probs.assign(2, Rational());
    const Rational complement(confidence.den() - confidence.num(), confidence.den());
    prediction.probs[*plus] = predict_plus ? confidence : complement;
    prediction.probs[*minus] = predict_plus ? complement : confidence;
    return prediction;
  };
  return clf;
}

LabelId sample_label(const StochasticPrediction& prediction, std::mt19937& rng) {
  if (prediction.probs.empty()) throw std::invalid_argument("empty prediction");
  // Draw a uniform rational with the common denominator.
  std::uint64_t den = 1;
  for (const Rational& p : prediction.probs) den = std::lcm(den, p.den());
  std::uniform_int_distribution<std::uint64_t> dist(0, den - 1);
  std::uint64_t draw = dist(rng);
  for (std::size_t c = 0; c < prediction.probs.size(); ++c) {
    const std::uint64_t weight = prediction.probs[c].num() * (den / prediction.probs[c].den());
    if (draw < weight) return static_cast<LabelId>(c);
    draw -= weight;
  }
  return static_cast<LabelId>(prediction.probs.size() - 1);
}

}  // namespace fairaudit
