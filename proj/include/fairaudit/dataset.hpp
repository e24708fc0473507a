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

#ifndef FAIRAUDIT_DATASET_HPP_
#define FAIRAUDIT_DATASET_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairaudit/feature_set.hpp"

namespace fairaudit {

// Index into a per-feature value dictionary.
using ValueId = std::uint32_t;
// Index into the dataset's label dictionary.
using LabelId = std::uint32_t;

struct FeatureVector {
  std::vector<ValueId> values;
};

// One data point with only the features in `revealed` visible. The point
// itself stays in the dataset; a MaskedVector is just (index, mask).
struct MaskedVector {
  std::size_t source = 0;
  FeatureSet revealed;

  friend bool operator==(const MaskedVector&, const MaskedVector&) = default;
};

// An immutable labeled table of categorical feature vectors. Cell values are
// opaque tokens interned into per-feature dictionaries in first-occurrence
// order; nothing in the library interprets them numerically. Duplicate rows
// are kept — they carry weight in the empirical probability model.
//
// Immutable after construction, so all member functions are safe to call from
// any number of threads concurrently.
class Dataset {
 public:
  // Validates all structural invariants (vector lengths, id ranges) and
  // throws std::invalid_argument on violation. n >= 1 is required; d may be 0.
  Dataset(std::vector<std::string> feature_names,
          std::vector<std::vector<std::string>> value_dictionaries,
          std::vector<FeatureVector> points,
          std::vector<LabelId> labels,
          std::vector<std::string> label_names);

  // Interns raw string tokens: rows[i][f] is the value of feature f in point
  // i, labels[i] its label token. Dictionaries are built in first-occurrence
  // order.
  static Dataset from_rows(std::vector<std::string> feature_names,
                           const std::vector<std::vector<std::string>>& rows,
                           const std::vector<std::string>& labels);

  std::size_t size() const { return points_.size(); }            // n
  std::size_t feature_count() const { return feature_names_.size(); }  // d
  std::size_t label_count() const { return label_names_.size(); }

  const std::vector<std::string>& feature_names() const { return feature_names_; }
  const std::vector<std::string>& label_names() const { return label_names_; }

  const FeatureVector& point(std::size_t i) const { return points_[i]; }
  LabelId label(std::size_t i) const { return labels_[i]; }
  ValueId value(std::size_t point, std::size_t feature) const {
    return points_[point].values[feature];
  }

  const std::string& value_token(std::size_t feature, ValueId v) const {
    return value_dictionaries_[feature][v];
  }
  const std::string& label_name(LabelId l) const { return label_names_[l]; }
  std::size_t value_dictionary_size(std::size_t feature) const {
    return value_dictionaries_[feature].size();
  }

  std::optional<std::size_t> feature_index(std::string_view name) const;
  std::optional<LabelId> label_id(std::string_view name) const;

  // True iff points i and j have equal values on every feature in s.
  bool agree(std::size_t i, std::size_t j, const FeatureSet& s) const;

 private:
  std::vector<std::string> feature_names_;
  std::vector<std::vector<std::string>> value_dictionaries_;
  std::vector<FeatureVector> points_;
  std::vector<LabelId> labels_;
  std::vector<std::string> label_names_;
};

// Masks point i of ds down to the features in s. Throws std::out_of_range if
// i >= n or s reaches outside [0, d).
MaskedVector project(const Dataset& ds, std::size_t i, const FeatureSet& s);

// Drops every feature whose value is identical across all points; surviving
// feature order is preserved. Returns the reduced dataset and the names of
// the removed features (for the audit log).
std::pair<Dataset, std::vector<std::string>> remove_constant_features(const Dataset& ds);

}  // namespace fairaudit

#endif  // FAIRAUDIT_DATASET_HPP_
