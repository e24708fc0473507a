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

#ifndef FAIRAUDIT_POWER_HPP_
#define FAIRAUDIT_POWER_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "fairaudit/dataset.hpp"
#include "fairaudit/rational.hpp"

namespace fairaudit {

// Empirical label counts over a group of points. Probabilities are exactly
// counts[c] / total.
struct LabelDistribution {
  std::vector<std::uint64_t> counts;  // one entry per label id
  std::uint64_t total = 0;

  Rational probability(LabelId c) const { return Rational(counts[c], total); }
  // Smallest label id among those with maximal count.
  LabelId argmax() const;
  Rational max_probability() const { return Rational(counts[argmax()], total); }
};

// Partition of the point indices into groups that agree on every feature of
// one set. Groups appear in order of first occurrence; group_of[i] is the
// group index of point i.
struct ProjectionPartition {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of;
};

// The predictive power of one feature set for every point: phi[i] is the
// probability of the most probable label within point i's projection group.
struct PowerTable {
  FeatureSet set;
  std::vector<Rational> phi;
  bool any_distinguishable = false;  // true iff some phi[i] == 1
};

// Memoizing store of PowerTables keyed by feature set, shared across the
// checks of one dataset. Lookups take a shared lock; inserts are
// insert-if-absent, so a racing duplicate computation is discarded, not
// double-stored. A cache instance must only ever see one dataset.
//
// max_entries == 0 means unbounded. When bounded, insertion beyond the cap
// evicts the entry with the largest set first: small sets are the ones the
// subset checks keep coming back to.
class PowerCache {
 public:
  explicit PowerCache(std::size_t max_entries = 0) : max_entries_(max_entries) {}

  std::shared_ptr<const PowerTable> get_or_compute(const Dataset& ds, const FeatureSet& s);

  std::size_t size() const;
  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<FeatureSet, std::shared_ptr<const PowerTable>, FeatureSet::Hash> entries_;
  std::size_t max_entries_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

// Points i and j land in the same group iff they agree on every feature in s.
// s = {} yields a single group holding all points.
ProjectionPartition group_by_projection(const Dataset& ds, const FeatureSet& s);

// Label counts over a non-empty group of point indices. Throws
// std::invalid_argument on an empty group.
LabelDistribution conditional_distribution(const Dataset& ds, std::span<const std::size_t> group);

// Phi_s(x_i): probability of the most probable label among the points that
// agree with point i on s. Exactly 1 iff i is distinguishable using s.
// Standalone single-point route; power_table() computes all points at once.
Rational predictive_power(const Dataset& ds, const FeatureSet& s, std::size_t i);

// Phi vector for all points in one grouping pass, memoized in `cache`.
std::shared_ptr<const PowerTable> power_table(const Dataset& ds, const FeatureSet& s,
                                              PowerCache& cache);

}  // namespace fairaudit

#endif  // FAIRAUDIT_POWER_HPP_
