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

#ifndef FAIRAUDIT_FEATURE_SET_HPP_
#define FAIRAUDIT_FEATURE_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fairaudit {

// A subset of feature indices, kept sorted and duplicate-free. The empty set
// is a valid value. FeatureSet is a value type; all mutating-style helpers
// return a new set.
class FeatureSet {
 public:
  FeatureSet() = default;
  FeatureSet(std::initializer_list<std::size_t> members);
  // Sorts and deduplicates.
  static FeatureSet of(std::vector<std::size_t> members);
  // {0, 1, ..., d-1}.
  static FeatureSet full(std::size_t d);

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<std::size_t>& members() const { return members_; }

  bool contains(std::size_t feature) const;
  // Largest member; set must be non-empty.
  std::size_t max_index() const;

  FeatureSet with(std::size_t feature) const;
  FeatureSet without(std::size_t feature) const;

  bool is_subset_of(const FeatureSet& other) const;
  bool is_proper_subset_of(const FeatureSet& other) const;

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;

  // "{0, 2}" with raw indices; callers that know the dataset render names.
  std::string to_string() const;

  struct Hash {
    std::size_t operator()(const FeatureSet& s) const;
  };

 private:
  std::vector<std::size_t> members_;
};

// Invokes fn with every proper subset of `set` (including the empty set), in
// increasing cardinality; within one cardinality subsets appear in
// lexicographic member order. Stops early when fn returns false. Returns
// false iff some invocation returned false. Sets larger than 63 members are
// rejected (enumeration would not terminate in any reasonable time anyway).
bool for_each_proper_subset(const FeatureSet& set,
                            const std::function<bool(const FeatureSet&)>& fn);

}  // namespace fairaudit

#endif  // FAIRAUDIT_FEATURE_SET_HPP_
