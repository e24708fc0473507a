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

#include "fairaudit/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace fairaudit {
namespace {

struct ParsedCsv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// One pass over the buffer; quoted fields may contain commas, newlines and
// doubled quotes.
ParsedCsv parse_csv(std::string_view text) {
  if (text.substr(0, 3) == "\xef\xbb\xbf") text.remove_prefix(3);  // UTF-8 BOM

  ParsedCsv out;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool record_has_content = false;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    if (record.size() > 1 || !record[0].empty() || record_has_content) {
      out.rows.push_back(std::move(record));
    }
    record.clear();
    record_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        record_has_content = true;
        break;
      case ',':
        record_has_content = true;
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        record_has_content = true;
        break;
    }
  }
  if (in_quotes) throw std::runtime_error("csv: unterminated quoted field");
  if (record_has_content || !field.empty() || !record.empty()) end_record();

  if (out.rows.empty()) throw std::runtime_error("csv: empty file (no header row)");
  out.header = std::move(out.rows.front());
  out.rows.erase(out.rows.begin());
  return out;
}

std::size_t resolve_label_column(const ParsedCsv& csv, const IngestConfig& config) {
  if (config.label_column.has_value() == config.label_index.has_value()) {
    throw std::runtime_error("csv: exactly one of label column name or index must be given");
  }
  if (config.label_index) {
    if (*config.label_index >= csv.header.size()) {
      throw std::runtime_error("csv: label index " + std::to_string(*config.label_index) +
                               " out of range for " + std::to_string(csv.header.size()) +
                               " columns");
    }
    return *config.label_index;
  }
  for (std::size_t i = 0; i < csv.header.size(); ++i) {
    if (csv.header[i] == *config.label_column) return i;
  }
  throw std::runtime_error("csv: label column '" + *config.label_column + "' not found");
}

CsvLoadResult build_dataset(const ParsedCsv& csv, const IngestConfig& config) {
  if (csv.header.empty() || (csv.header.size() == 1 && csv.header[0].empty())) {
    throw std::runtime_error("csv: missing header row");
  }
  std::unordered_set<std::string> seen;
  for (const std::string& name : csv.header) {
    if (name.empty()) throw std::runtime_error("csv: empty column name in header");
    if (!seen.insert(name).second) {
      throw std::runtime_error("csv: duplicate column name '" + name + "'");
    }
  }
  const std::size_t label_col = resolve_label_column(csv, config);

  std::vector<std::string> feature_names;
  for (std::size_t i = 0; i < csv.header.size(); ++i) {
    if (i != label_col) feature_names.push_back(csv.header[i]);
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> labels;
  std::size_t dropped = 0;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& raw = csv.rows[r];
    if (raw.size() != csv.header.size()) {
      throw std::runtime_error("csv: row " + std::to_string(r + 2) + " has " +
                               std::to_string(raw.size()) + " cells, expected " +
                               std::to_string(csv.header.size()));
    }
    bool has_missing = false;
    for (const std::string& cell : raw) {
      if (cell.empty()) {
        has_missing = true;
        break;
      }
    }
    if (has_missing) {
      if (config.missing == MissingPolicy::kReject) {
        throw std::runtime_error("csv: empty cell in row " + std::to_string(r + 2) +
                                 " (use the drop-missing-rows option to skip such rows)");
      }
      ++dropped;
      continue;
    }
    std::vector<std::string> features;
    features.reserve(feature_names.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (i != label_col) features.push_back(raw[i]);
    }
    rows.push_back(std::move(features));
    labels.push_back(raw[label_col]);
  }
  if (rows.empty()) {
    throw std::runtime_error(dropped > 0
                                 ? "csv: empty dataset (all rows dropped for missing values)"
                                 : "csv: empty dataset (header but no data rows)");
  }
  return CsvLoadResult{Dataset::from_rows(std::move(feature_names), rows, labels), dropped};
}

}  // namespace

CsvLoadResult load_csv_text(std::string_view text, const IngestConfig& config) {
  return build_dataset(parse_csv(text), config);
}

CsvLoadResult load_csv(const std::filesystem::path& path, const IngestConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("csv: cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_csv_text(buffer.str(), config);
}

}  // namespace fairaudit
