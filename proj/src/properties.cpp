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

#include "fairaudit/properties.hpp"

#include <stdexcept>

namespace fairaudit {
namespace {

void require_nonempty(const FeatureSet& s) {
  if (s.empty()) throw std::invalid_argument("condition checks require a non-empty feature set");
}

void validate_assignment(const FeatureAssignment& fa, std::size_t d) {
  for (const FeatureSet& s : fa.sets) {
    if (!s.empty() && s.max_index() >= d) {
      throw std::invalid_argument("assignment set " + s.to_string() +
                                  " reaches outside the feature range");
    }
  }
}

std::string point_name(std::size_t i) { return "point " + std::to_string(i); }

}  // namespace

CostVector CostVector::feature_count(std::size_t d) {
  CostVector c;
  c.regime = CostRegime::kFeatureCount;
  c.costs.assign(d, Rational(1, 1));
  return c;
}

CostVector CostVector::feature_match(std::size_t d) {
  if (d > 64) {
    throw std::invalid_argument(
        "feature-match costs are powers of two and overflow exact arithmetic beyond 64 "
        "features; the set-equality semantics do not need them there");
  }
  CostVector c;
  c.regime = CostRegime::kFeatureMatch;
  c.costs.reserve(d);
  for (std::size_t i = 0; i < d; ++i) c.costs.emplace_back(std::uint64_t(1) << i, 1);
  return c;
}

CostVector CostVector::custom(std::vector<Rational> costs) {
  CostVector c;
  c.regime = CostRegime::kCustom;
  c.costs = std::move(costs);
  return c;
}

Rational CostVector::total(const FeatureSet& s) const {
  Rational sum;
  for (std::size_t f : s.members()) sum += costs.at(f);
  return sum;
}

PropertyVerdict check_fair_accuracy(const Dataset& ds, const ClassifierUnderTest& clf,
                                    const FeatureAssignment& fa) {
  if (fa.sets.size() != ds.size()) {
    throw std::invalid_argument("assignment must cover every point exactly once");
  }
  validate_assignment(fa, ds.feature_count());

  PropertyVerdict verdict;
  Rational gamma;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Rational acc = prediction_accuracy(ds, clf, project(ds, i, fa.sets[i]));
    if (i == 0) {
      gamma = acc;
      continue;
    }
    if (acc != gamma) {
      verdict.holds = false;
      verdict.violating_point = 0;
      verdict.second_point = i;
      verdict.witness = "accuracy " + gamma.to_pretty_string() + " for " + point_name(0) +
                        " vs " + acc.to_pretty_string() + " for " + point_name(i);
      return verdict;
    }
  }
  if (gamma.is_zero()) {
    verdict.holds = false;
    verdict.witness = "common accuracy is 0, outside (0, 1]";
    return verdict;
  }
  verdict.holds = true;
  verdict.value = gamma;
  verdict.witness = "gamma = " + gamma.to_pretty_string();
  return verdict;
}

PropertyVerdict check_need_to_know(const Dataset& ds, const ClassifierUnderTest& clf,
                                   const FeatureAssignment& fa) {
  if (fa.sets.size() != ds.size()) {
    throw std::invalid_argument("assignment must cover every point exactly once");
  }
  validate_assignment(fa, ds.feature_count());

  PropertyVerdict verdict;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Rational full = prediction_accuracy(ds, clf, project(ds, i, fa.sets[i]));
    const bool minimal = for_each_proper_subset(fa.sets[i], [&](const FeatureSet& sub) {
      if (prediction_accuracy(ds, clf, project(ds, i, sub)) >= full) {
        verdict.violating_point = i;
        verdict.violating_subset = sub;
        return false;
      }
      return true;
    });
    if (!minimal) {
      verdict.holds = false;
      verdict.witness = point_name(i) + " does as well with subset " +
                        verdict.violating_subset->to_string() + " of " + fa.sets[i].to_string();
      return verdict;
    }
  }
  verdict.holds = true;
  verdict.witness = "every proper subset strictly lowers accuracy";
  return verdict;
}

PropertyVerdict check_fair_privacy(const FeatureAssignment& fa, const CostVector& c) {
  validate_assignment(fa, c.costs.size());
  PropertyVerdict verdict;
  if (fa.sets.empty()) {
    verdict.holds = true;
    verdict.witness = "no points";
    return verdict;
  }
  const FeatureSet& first = fa.sets.front();
  for (std::size_t i = 1; i < fa.sets.size(); ++i) {
    const FeatureSet& s = fa.sets[i];
    const bool equal = c.regime == CostRegime::kFeatureCount ? s.size() == first.size()
                       : c.regime == CostRegime::kFeatureMatch
                           ? s == first
                           : c.total(s) == c.total(first);
    if (!equal) {
      verdict.holds = false;
      verdict.violating_point = i;
      verdict.second_point = 0;
      verdict.witness = "cost " + c.total(first).to_pretty_string() + " for " + point_name(0) +
                        " (" + first.to_string() + ") vs " + c.total(s).to_pretty_string() +
                        " for " + point_name(i) + " (" + s.to_string() + ")";
      return verdict;
    }
  }
  verdict.holds = true;
  verdict.value = c.total(first);
  if (c.regime == CostRegime::kFeatureMatch) verdict.common_set = first;
  verdict.witness = "common cost " + verdict.value->to_pretty_string() +
                    (verdict.common_set ? ", common set " + verdict.common_set->to_string() : "");
  return verdict;
}

bool check_condition7(const Dataset& ds, const FeatureSet& s, PowerCache& cache) {
  require_nonempty(s);
  const auto table = power_table(ds, s, cache);
  const Rational gamma = table->phi.front();
  for (const Rational& phi : table->phi) {
    if (phi != gamma) return false;
  }
  // gamma >= 1/n > 0, so the (0, 1] requirement is automatic.
  return for_each_proper_subset(s, [&](const FeatureSet& sub) {
    const auto sub_table = power_table(ds, sub, cache);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (!(sub_table->phi[i] < table->phi[i])) return false;
    }
    return true;
  });
}

bool clause1_unequal_power(const Dataset& ds, const FeatureSet& s, PowerCache& cache) {
  require_nonempty(s);
  const auto table = power_table(ds, s, cache);
  const Rational& first = table->phi.front();
  for (const Rational& phi : table->phi) {
    if (phi != first) return true;
  }
  return false;
}

bool clause2_ntk_violation(const Dataset& ds, const FeatureSet& s, PowerCache& cache) {
  require_nonempty(s);
  const auto table = power_table(ds, s, cache);
  const bool all_strictly_lower = for_each_proper_subset(s, [&](const FeatureSet& sub) {
    const auto sub_table = power_table(ds, sub, cache);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (sub_table->phi[i] >= table->phi[i]) return false;
    }
    return true;
  });
  return !all_strictly_lower;
}

}  // namespace fairaudit
