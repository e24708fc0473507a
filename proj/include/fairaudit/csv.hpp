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

#ifndef FAIRAUDIT_CSV_HPP_
#define FAIRAUDIT_CSV_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fairaudit/dataset.hpp"

namespace fairaudit {

enum class MissingPolicy {
  kReject,   // any empty cell is an error (default)
  kDropRow,  // rows with an empty cell are dropped; the count is reported
};

struct IngestConfig {
  // Exactly one of these selects the label column.
  std::optional<std::string> label_column;
  std::optional<std::size_t> label_index;
  MissingPolicy missing = MissingPolicy::kReject;
};

struct CsvLoadResult {
  Dataset dataset;
  std::size_t rows_dropped = 0;
};

// Reads a UTF-8 CSV with a header row: comma-separated, double-quote quoting
// with "" escapes, CR/LF tolerant. All cells are categorical tokens; the
// label column is removed from the feature list. Throws fairaudit-flavored
// std::runtime_error on malformed input (missing or duplicate header, absent
// label column, row length mismatch, empty cell under kReject, no data rows).
CsvLoadResult load_csv(const std::filesystem::path& path, const IngestConfig& config);

// Same, from an in-memory buffer.
CsvLoadResult load_csv_text(std::string_view text, const IngestConfig& config);

}  // namespace fairaudit

#endif  // FAIRAUDIT_CSV_HPP_
