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

#include "fairaudit/dataset.hpp"

#include <stdexcept>
#include <unordered_map>

namespace fairaudit {

Dataset::Dataset(std::vector<std::string> feature_names,
                 std::vector<std::vector<std::string>> value_dictionaries,
                 std::vector<FeatureVector> points,
                 std::vector<LabelId> labels,
                 std::vector<std::string> label_names)
    : feature_names_(std::move(feature_names)),
      value_dictionaries_(std::move(value_dictionaries)),
      points_(std::move(points)),
      labels_(std::move(labels)),
      label_names_(std::move(label_names)) {
  if (points_.empty()) throw std::invalid_argument("dataset must contain at least one point");
  if (labels_.size() != points_.size()) {
    throw std::invalid_argument("labels length does not match point count");
  }
  if (value_dictionaries_.size() != feature_names_.size()) {
    throw std::invalid_argument("one value dictionary per feature required");
  }
  const std::size_t d = feature_names_.size();
  for (const FeatureVector& p : points_) {
    if (p.values.size() != d) {
      throw std::invalid_argument("feature vector length does not match feature count");
    }
    for (std::size_t f = 0; f < d; ++f) {
      if (p.values[f] >= value_dictionaries_[f].size()) {
        throw std::invalid_argument("value id out of range for feature '" + feature_names_[f] + "'");
      }
    }
  }
  for (LabelId l : labels_) {
    if (l >= label_names_.size()) throw std::invalid_argument("label id out of range");
  }
}

Dataset Dataset::from_rows(std::vector<std::string> feature_names,
                           const std::vector<std::vector<std::string>>& rows,
                           const std::vector<std::string>& labels) {
  if (rows.size() != labels.size()) {
    throw std::invalid_argument("row count does not match label count");
  }
  const std::size_t d = feature_names.size();
  std::vector<std::vector<std::string>> dictionaries(d);
  std::vector<std::unordered_map<std::string, ValueId>> value_ids(d);
  std::vector<std::string> label_names;
  std::unordered_map<std::string, LabelId> label_ids;

  std::vector<FeatureVector> points;
  points.reserve(rows.size());
  std::vector<LabelId> point_labels;
  point_labels.reserve(rows.size());

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " cells, expected " +
                                  std::to_string(d));
    }
    FeatureVector fv;
    fv.values.reserve(d);
    for (std::size_t f = 0; f < d; ++f) {
      auto [it, inserted] =
          value_ids[f].try_emplace(rows[i][f], static_cast<ValueId>(dictionaries[f].size()));
      if (inserted) dictionaries[f].push_back(rows[i][f]);
      fv.values.push_back(it->second);
    }
    points.push_back(std::move(fv));
    auto [it, inserted] =
        label_ids.try_emplace(labels[i], static_cast<LabelId>(label_names.size()));
    if (inserted) label_names.push_back(labels[i]);
    point_labels.push_back(it->second);
  }
  return Dataset(std::move(feature_names), std::move(dictionaries), std::move(points),
                 std::move(point_labels), std::move(label_names));
}

std::optional<std::size_t> Dataset::feature_index(std::string_view name) const {
  for (std::size_t i = 0; i < feature_names_.size(); ++i) {
    if (feature_names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<LabelId> Dataset::label_id(std::string_view name) const {
  for (std::size_t i = 0; i < label_names_.size(); ++i) {
    if (label_names_[i] == name) return static_cast<LabelId>(i);
  }
  return std::nullopt;
}

bool Dataset::agree(std::size_t i, std::size_t j, const FeatureSet& s) const {
  for (std::size_t f : s.members()) {
    if (points_[i].values[f] != points_[j].values[f]) return false;
  }
  return true;
}

MaskedVector project(const Dataset& ds, std::size_t i, const FeatureSet& s) {
  if (i >= ds.size()) {
    throw std::out_of_range("point index " + std::to_string(i) + " out of range");
  }
  if (!s.empty() && s.max_index() >= ds.feature_count()) {
    throw std::out_of_range("feature set " + s.to_string() + " reaches outside the dataset");
  }
  return MaskedVector{i, s};
}

std::pair<Dataset, std::vector<std::string>> remove_constant_features(const Dataset& ds) {
  const std::size_t d = ds.feature_count();
  std::vector<std::size_t> kept;
  std::vector<std::string> removed;
  for (std::size_t f = 0; f < d; ++f) {
    bool constant = true;
    const ValueId first = ds.value(0, f);
    for (std::size_t i = 1; i < ds.size() && constant; ++i) {
      constant = ds.value(i, f) == first;
    }
    if (constant) {
      removed.push_back(ds.feature_names()[f]);
    } else {
      kept.push_back(f);
    }
  }
  if (removed.empty()) return {ds, {}};

  std::vector<std::string> names;
  std::vector<std::vector<std::string>> dictionaries;
  names.reserve(kept.size());
  dictionaries.reserve(kept.size());
  for (std::size_t f : kept) {
    names.push_back(ds.feature_names()[f]);
    std::vector<std::string> dict;
    for (std::size_t v = 0; v < ds.value_dictionary_size(f); ++v) {
      dict.push_back(ds.value_token(f, static_cast<ValueId>(v)));
    }
    dictionaries.push_back(std::move(dict));
  }
  std::vector<FeatureVector> points;
  points.reserve(ds.size());
  std::vector<LabelId> labels;
  labels.reserve(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    FeatureVector fv;
    fv.values.reserve(kept.size());
    for (std::size_t f : kept) fv.values.push_back(ds.value(i, f));
    points.push_back(std::move(fv));
    labels.push_back(ds.label(i));
  }
  Dataset reduced(std::move(names), std::move(dictionaries), std::move(points),
                  std::move(labels), std::vector<std::string>(ds.label_names()));
  return {std::move(reduced), std::move(removed)};
}

}  // namespace fairaudit
