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

#ifndef FAIRAUDIT_VERIFIER_HPP_
#define FAIRAUDIT_VERIFIER_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fairaudit/dataset.hpp"

namespace fairaudit {

struct VerifierOptions {
  // Cap on the size of feature sets the search will examine. Unset means
  // unbounded. When the cap actually cuts the search short, the report is
  // flagged verdict_bounded and only speaks for the examined candidates.
  std::optional<std::size_t> max_candidate_size;
  bool parallel = false;
  unsigned threads = 0;  // 0 = hardware concurrency; only used when parallel
  std::size_t cache_cap = 0;  // PowerCache entry cap, 0 = unbounded
};

// Outcome of one verification run, with the search statistics an audit log
// wants alongside the verdict.
struct VerificationReport {
  // True: the dataset exhibits the trade-off — no optimal non-trivial
  // classifier can satisfy fair accuracy, fair privacy, and need-to-know
  // together. False: `counterexample` names a feature set on which all three
  // are simultaneously satisfiable.
  bool tradeoff = true;
  // Present iff tradeoff is false. Indices refer to the *input* dataset.
  std::optional<FeatureSet> counterexample;
  std::size_t candidates_examined = 0;
  std::size_t largest_candidate_size = 0;
  // Whether any candidate needed the subset (need-to-know) clause after
  // passing the unequal-power clause.
  bool clause2_used = false;
  bool verdict_bounded = false;
  std::vector<std::string> constant_features_removed;
  std::chrono::duration<double, std::milli> elapsed{0};
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t label_count = 0;
};

// Decides the trade-off by pruned breadth-first search over feature sets:
// constant features are dropped up front, sets grow only by features above
// their largest index, and a set under which some point is already
// distinguishable is never extended (its supersets all violate need-to-know,
// since predictive power cannot exceed 1). Every surviving non-empty set is a
// candidate and must show unequal power across points or a subset at least as
// powerful; otherwise that set witnesses condition-satisfiability and the
// verdict is "no trade-off".
VerificationReport verify_tradeoff(const Dataset& ds, const VerifierOptions& opts = {});

struct BruteForceResult {
  bool tradeoff = true;
  std::optional<FeatureSet> counterexample;
};

// The naive route: tests every non-empty subset of F directly, no pruning, no
// memoization, quadratic grouping. Exponential in d — refuses datasets with
// more than `feature_limit` features. Exists as the independent cross-check
// for verify_tradeoff; the two must agree on every input.
BruteForceResult brute_force_verify(const Dataset& ds, std::size_t feature_limit = 20);

}  // namespace fairaudit

#endif  // FAIRAUDIT_VERIFIER_HPP_
