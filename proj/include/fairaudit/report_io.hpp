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

#ifndef FAIRAUDIT_REPORT_IO_HPP_
#define FAIRAUDIT_REPORT_IO_HPP_

#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fairaudit/dataset.hpp"
#include "fairaudit/power.hpp"
#include "fairaudit/properties.hpp"
#include "fairaudit/verifier.hpp"

namespace fairaudit {

// A verification report with its dataset name and the counterexample resolved
// to feature names — everything the serialized forms need.
struct NamedReport {
  std::string dataset_name;
  VerificationReport report;
  std::vector<std::string> counterexample_names;
};

NamedReport make_named_report(std::string dataset_name, const Dataset& input,
                              VerificationReport report);

// JSON with a fixed field order, so parse + re-serialize is byte-identical.
// Rationals never appear as floats; elapsed is wall time in milliseconds.
nlohmann::ordered_json report_to_json(const NamedReport& report);
NamedReport report_from_json(const nlohmann::ordered_json& j);

// One aligned row per report: dataset, size, feature/label counts, largest
// candidate, which clauses carried the verdict, and the verdict itself.
std::string render_report_table(std::span<const NamedReport> reports);
// Key/value block with the long-form fields (counterexample, removed
// features, timing).
std::string render_report_details(const NamedReport& report);

// "p/q" string plus a decimal convenience value rounded to 15 significant
// digits; the decimal is for human readers only.
void append_rational(nlohmann::ordered_json& j, const std::string& key, const Rational& value);

nlohmann::ordered_json power_tables_to_json(
    const Dataset& ds, std::span<const std::shared_ptr<const PowerTable>> tables);
// Points as rows, one phi column per feature set.
std::string render_power_tables(const Dataset& ds,
                                std::span<const std::shared_ptr<const PowerTable>> tables);

nlohmann::ordered_json verdict_to_json(const PropertyVerdict& verdict, const Dataset& ds);
std::string render_verdict(const std::string& property, const PropertyVerdict& verdict,
                           const Dataset& ds);

// Plain key=value sidecar manifest recording preprocessing for audit replay.
void write_manifest(std::ostream& out,
                    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace fairaudit

#endif  // FAIRAUDIT_REPORT_IO_HPP_
