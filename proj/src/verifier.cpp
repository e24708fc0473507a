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

#include "fairaudit/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "fairaudit/power.hpp"
#include "fairaudit/properties.hpp"
#include "fairaudit/rational.hpp"
#include "parallel.hpp"

namespace fairaudit {
namespace {

unsigned effective_threads(const VerifierOptions& opts) {
  if (!opts.parallel) return 1;
  if (opts.threads > 0) return opts.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Indices of the features that survive constant removal, in order. Uses the
// same predicate as remove_constant_features so the two stay aligned.
std::vector<std::size_t> surviving_features(const Dataset& ds) {
  std::vector<std::size_t> kept;
  for (std::size_t f = 0; f < ds.feature_count(); ++f) {
    bool constant = true;
    for (std::size_t i = 1; i < ds.size() && constant; ++i) {
      constant = ds.value(i, f) == ds.value(0, f);
    }
    if (!constant) kept.push_back(f);
  }
  return kept;
}

}  // namespace

VerificationReport verify_tradeoff(const Dataset& input, const VerifierOptions& opts) {
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.n = input.size();
  report.d = input.feature_count();
  report.label_count = input.label_count();

  const std::vector<std::size_t> kept = surviving_features(input);
  auto [ds, removed] = remove_constant_features(input);
  report.constant_features_removed = std::move(removed);

  const unsigned threads = effective_threads(opts);
  PowerCache cache(opts.cache_cap);

  // Generation phase: breadth-first, level = set size. A set grows only by
  // features above its largest index, so every subset is reached exactly
  // once, and growth stops at any set under which a point is already
  // distinguishable — predictive power cannot exceed 1, so every superset
  // violates need-to-know and needs no examination.
  std::vector<FeatureSet> level{FeatureSet{}};
  std::vector<FeatureSet> candidates;
  bool truncated = false;
  while (!level.empty()) {
    internal::cancellable_for(level.size(), threads, [&](std::size_t k) {
      power_table(ds, level[k], cache);
      return true;
    });
    std::vector<FeatureSet> next;
    for (const FeatureSet& s : level) {
      if (!s.empty()) candidates.push_back(s);
      if (power_table(ds, s, cache)->any_distinguishable) continue;
      const std::size_t from = s.empty() ? 0 : s.max_index() + 1;
      if (from >= ds.feature_count()) continue;
      if (opts.max_candidate_size && s.size() >= *opts.max_candidate_size) {
        truncated = true;
        continue;
      }
      for (std::size_t f = from; f < ds.feature_count(); ++f) next.push_back(s.with(f));
    }
    level = std::move(next);
  }

  report.candidates_examined = candidates.size();
  for (const FeatureSet& s : candidates) {
    report.largest_candidate_size = std::max(report.largest_candidate_size, s.size());
  }
  report.verdict_bounded = truncated;

  // Elimination phase: a candidate is cleared by unequal power across points
  // (clause 1, linear) or by a subset at least as powerful (clause 2,
  // exponential in the candidate size). A candidate clearing neither is a
  // counterexample: condition (7) holds on it and the trade-off is absent.
  std::atomic<bool> clause2_used{false};
  std::atomic<std::size_t> failing{std::numeric_limits<std::size_t>::max()};
  internal::cancellable_for(candidates.size(), threads, [&](std::size_t k) {
    const FeatureSet& s = candidates[k];
    if (clause1_unequal_power(ds, s, cache)) return true;
    if (clause2_ntk_violation(ds, s, cache)) {
      clause2_used.store(true, std::memory_order_relaxed);
      return true;
    }
    std::size_t prev = failing.load();
    while (k < prev && !failing.compare_exchange_weak(prev, k)) {
    }
    return false;
  });

  report.clause2_used = clause2_used.load();
  const std::size_t fail_index = failing.load();
  if (fail_index != std::numeric_limits<std::size_t>::max()) {
    report.tradeoff = false;
    // Map back to the input dataset's feature indices.
    std::vector<std::size_t> members;
    for (std::size_t m : candidates[fail_index].members()) members.push_back(kept[m]);
    report.counterexample = FeatureSet::of(std::move(members));
  }

  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

namespace {

bool agree_on_mask(const Dataset& ds, std::size_t i, std::size_t j, std::uint64_t mask) {
  for (std::size_t f = 0; f < ds.feature_count(); ++f) {
    if ((mask >> f & 1) && ds.value(i, f) != ds.value(j, f)) return false;
  }
  return true;
}

Rational phi_direct(const Dataset& ds, std::uint64_t mask, std::size_t i) {
  std::vector<std::uint64_t> counts(ds.label_count(), 0);
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < ds.size(); ++j) {
    if (agree_on_mask(ds, i, j, mask)) {
      ++counts[ds.label(j)];
      ++total;
    }
  }
  return Rational(*std::max_element(counts.begin(), counts.end()), total);
}

bool condition7_direct(const Dataset& ds, std::uint64_t mask) {
  std::vector<Rational> phi;
  phi.reserve(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) phi.push_back(phi_direct(ds, mask, i));
  for (const Rational& p : phi) {
    if (p != phi.front()) return false;
  }
  // All proper submasks, the empty one included.
  std::uint64_t sub = (mask - 1) & mask;
  while (true) {
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (phi_direct(ds, sub, i) >= phi[i]) return false;
    }
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  return true;
}

}  // namespace

BruteForceResult brute_force_verify(const Dataset& ds, std::size_t feature_limit) {
  const std::size_t d = ds.feature_count();
  if (d > feature_limit || d > 62) {
    throw std::invalid_argument("brute-force verification over " + std::to_string(d) +
                                " features exceeds the limit of " +
                                std::to_string(std::min<std::size_t>(feature_limit, 62)));
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << d); ++mask) {
    if (condition7_direct(ds, mask)) {
      std::vector<std::size_t> members;
      for (std::size_t f = 0; f < d; ++f) {
        if (mask >> f & 1) members.push_back(f);
      }
      return BruteForceResult{false, FeatureSet::of(std::move(members))};
    }
  }
  return BruteForceResult{true, std::nullopt};
}

}  // namespace fairaudit
