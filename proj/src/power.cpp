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

#include "fairaudit/power.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace fairaudit {
namespace {

struct ValueTupleHash {
  std::size_t operator()(const std::vector<ValueId>& values) const {
    std::uint64_t h = 1469598103934665603ull;
    for (ValueId v : values) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

LabelId LabelDistribution::argmax() const {
  if (total == 0) throw std::logic_error("argmax of empty distribution");
  std::size_t best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c) {
    if (counts[c] > counts[best]) best = c;
  }
  return static_cast<LabelId>(best);
}

ProjectionPartition group_by_projection(const Dataset& ds, const FeatureSet& s) {
  if (!s.empty() && s.max_index() >= ds.feature_count()) {
    throw std::out_of_range("feature set " + s.to_string() + " reaches outside the dataset");
  }
  const std::size_t n = ds.size();
  ProjectionPartition partition;
  partition.group_of.resize(n);

  // Key = values at the features of s, in member order. The feature indices
  // are implied by position, which keeps keys canonical.
  std::unordered_map<std::vector<ValueId>, std::size_t, ValueTupleHash> index;
  std::vector<ValueId> key;
  key.reserve(s.size());
  for (std::size_t i = 0; i < n; ++i) {
    key.clear();
    for (std::size_t f : s.members()) key.push_back(ds.value(i, f));
    auto [it, inserted] = index.try_emplace(key, partition.groups.size());
    if (inserted) partition.groups.emplace_back();
    partition.groups[it->second].push_back(i);
    partition.group_of[i] = it->second;
  }
  return partition;
}

LabelDistribution conditional_distribution(const Dataset& ds,
                                           std::span<const std::size_t> group) {
  if (group.empty()) throw std::invalid_argument("conditional distribution of an empty group");
  LabelDistribution dist;
  dist.counts.assign(ds.label_count(), 0);
  for (std::size_t i : group) {
    ++dist.counts[ds.label(i)];
    ++dist.total;
  }
  return dist;
}

Rational predictive_power(const Dataset& ds, const FeatureSet& s, std::size_t i) {
  if (i >= ds.size()) {
    throw std::out_of_range("point index " + std::to_string(i) + " out of range");
  }
  std::vector<std::uint64_t> counts(ds.label_count(), 0);
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < ds.size(); ++j) {
    if (ds.agree(i, j, s)) {
      ++counts[ds.label(j)];
      ++total;
    }
  }
  return Rational(*std::max_element(counts.begin(), counts.end()), total);
}

namespace {

std::shared_ptr<const PowerTable> compute_power_table(const Dataset& ds, const FeatureSet& s) {
  auto table = std::make_shared<PowerTable>();
  table->set = s;
  table->phi.reserve(ds.size());

  const ProjectionPartition partition = group_by_projection(ds, s);
  std::vector<Rational> group_phi;
  group_phi.reserve(partition.groups.size());
  for (const auto& group : partition.groups) {
    group_phi.push_back(conditional_distribution(ds, group).max_probability());
  }
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Rational& phi = group_phi[partition.group_of[i]];
    if (phi.is_one()) table->any_distinguishable = true;
    table->phi.push_back(phi);
  }
  return table;
}

}  // namespace

std::shared_ptr<const PowerTable> PowerCache::get_or_compute(const Dataset& ds,
                                                             const FeatureSet& s) {
  {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(s);
    if (it != entries_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  auto table = compute_power_table(ds, s);

  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(s, table);
  if (!inserted) return it->second;  // racing thread won; results are equal
  while (max_entries_ != 0 && entries_.size() > max_entries_) {
    auto victim = entries_.begin();
    for (auto cand = entries_.begin(); cand != entries_.end(); ++cand) {
      if (cand->first.size() > victim->first.size()) victim = cand;
    }
    entries_.erase(victim);
  }
  return table;
}

std::size_t PowerCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::shared_ptr<const PowerTable> power_table(const Dataset& ds, const FeatureSet& s,
                                              PowerCache& cache) {
  return cache.get_or_compute(ds, s);
}

}  // namespace fairaudit
