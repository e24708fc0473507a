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

#include "fairaudit/feature_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairaudit {

FeatureSet::FeatureSet(std::initializer_list<std::size_t> members)
    : FeatureSet(of(std::vector<std::size_t>(members))) {}

FeatureSet FeatureSet::of(std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  FeatureSet s;
  s.members_ = std::move(members);
  return s;
}

FeatureSet FeatureSet::full(std::size_t d) {
  FeatureSet s;
  s.members_.resize(d);
  for (std::size_t i = 0; i < d; ++i) s.members_[i] = i;
  return s;
}

bool FeatureSet::contains(std::size_t feature) const {
  return std::binary_search(members_.begin(), members_.end(), feature);
}

std::size_t FeatureSet::max_index() const {
  if (members_.empty()) throw std::logic_error("max_index of empty feature set");
  return members_.back();
}

FeatureSet FeatureSet::with(std::size_t feature) const {
  if (contains(feature)) return *this;
  FeatureSet s = *this;
  s.members_.insert(std::lower_bound(s.members_.begin(), s.members_.end(), feature), feature);
  return s;
}

FeatureSet FeatureSet::without(std::size_t feature) const {
  FeatureSet s = *this;
  auto it = std::lower_bound(s.members_.begin(), s.members_.end(), feature);
  if (it != s.members_.end() && *it == feature) s.members_.erase(it);
  return s;
}

bool FeatureSet::is_subset_of(const FeatureSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool FeatureSet::is_proper_subset_of(const FeatureSet& other) const {
  return size() < other.size() && is_subset_of(other);
}

std::string FeatureSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(members_[i]);
  }
  out += "}";
  return out;
}

std::size_t FeatureSet::Hash::operator()(const FeatureSet& s) const {
  // FNV-1a over the member indices.
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t m : s.members()) {
    h ^= static_cast<std::uint64_t>(m);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool for_each_proper_subset(const FeatureSet& set,
                            const std::function<bool(const FeatureSet&)>& fn) {
  const std::size_t k = set.size();
  if (k > 63) throw std::length_error("proper-subset enumeration over >63 features");
  const auto& members = set.members();
  std::vector<std::size_t> scratch;
  // Gosper's hack per cardinality keeps the order (size, lexicographic).
  for (std::size_t card = 0; card < k; ++card) {
    if (card == 0) {
      if (!fn(FeatureSet())) return false;
      continue;
    }
    const std::uint64_t limit = 1ull << k;
    std::uint64_t mask = (1ull << card) - 1;
    while (mask < limit) {
      scratch.clear();
      for (std::size_t bit = 0; bit < k; ++bit) {
        if (mask & (1ull << bit)) scratch.push_back(members[bit]);
      }
      if (!fn(FeatureSet::of(scratch))) return false;
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return true;
}

}  // namespace fairaudit
