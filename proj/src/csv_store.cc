// Copyright 2026 The dqprog Authors.
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

#include "dqprog/csv_store.h"

#include <algorithm>
#include <charconv>
#include <set>

#include <json.hpp>

#include "dqprog/error.h"
#include "dqprog/program_io.h"

namespace dqprog {
namespace {

std::optional<double> ParseNumber(std::string_view s, bool* failed) {
  *failed = false;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    *failed = true;
    return std::nullopt;
  }
  return v;
}

std::string NumberText(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

}  // namespace

const Dtype* Schema::find(std::string_view name) const {
  for (const auto& [col, dtype] : columns) {
    if (col == name) return &dtype;
  }
  return nullptr;
}

Schema ParseSchema(std::string_view json_text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(json_text);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw DqError(ErrorCode::kSchema, std::string("schema: ") + e.what());
  }
  if (!j.is_object()) throw DqError(ErrorCode::kSchema, "schema: expected an object");
  Schema schema;
  for (const auto& [name, value] : j.items()) {
    if (!value.is_string()) {
      throw DqError(ErrorCode::kSchema, "schema." + name + ": expected a dtype string");
    }
    schema.columns.emplace_back(name, ParseDtype(value.get<std::string>()));
  }
  return schema;
}

Schema LoadSchema(const std::filesystem::path& path) { return ParseSchema(ReadFile(path)); }

std::vector<std::vector<std::string>> ParseCsv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    records.push_back(std::move(record));
    record.clear();
    field_started = false;
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
        field_started = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        end_record();
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) throw DqError(ErrorCode::kParse, "csv: unterminated quoted field");
  if (field_started || !record.empty()) end_record();
  return records;
}

std::string FormatCsvField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const ColumnSnapshot* Batch::find(std::string_view column) const {
  for (const auto& c : columns) {
    if (c.column_id == column) return &c;
  }
  return nullptr;
}

Batch ParseBatch(std::string_view csv_text, const Schema& schema,
                 std::uint64_t execution_index, std::string_view origin) {
  if (csv_text.substr(0, 3) == "\xEF\xBB\xBF") csv_text.remove_prefix(3);
  const auto records = ParseCsv(csv_text);
  const std::string where(origin);
  if (records.empty()) throw DqError(ErrorCode::kParse, where + ": missing header row");
  const auto& header = records.front();
  std::vector<int> slot(header.size(), -1);
  std::set<std::string> seen;
  for (std::size_t h = 0; h < header.size(); ++h) {
    if (!seen.insert(header[h]).second) {
      throw DqError(ErrorCode::kSchema, where + ": duplicate column '" + header[h] + "'");
    }
    const Dtype* dtype = schema.find(header[h]);
    if (dtype == nullptr) {
      throw DqError(ErrorCode::kSchema,
                    where + ": column '" + header[h] + "' has no schema entry");
    }
    for (std::size_t s = 0; s < schema.columns.size(); ++s) {
      if (schema.columns[s].first == header[h]) slot[h] = static_cast<int>(s);
    }
  }
  for (const auto& [name, dtype] : schema.columns) {
    if (!seen.count(name)) {
      throw DqError(ErrorCode::kSchema, where + ": header lacks column '" + name + "'");
    }
  }

  Batch batch;
  std::vector<NumericCells> numeric(schema.columns.size());
  std::vector<TextCells> text(schema.columns.size());
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() == 1 && rec[0].empty() && header.size() > 1) continue;  // blank line
    if (rec.size() != header.size()) {
      throw DqError(ErrorCode::kParse, where + ": row " + std::to_string(r) + " has " +
                                           std::to_string(rec.size()) + " fields, expected " +
                                           std::to_string(header.size()));
    }
    for (std::size_t h = 0; h < rec.size(); ++h) {
      const std::size_t s = static_cast<std::size_t>(slot[h]);
      if (schema.columns[s].second == Dtype::kNumeric) {
        bool failed = false;
        numeric[s].push_back(ParseNumber(rec[h], &failed));
        if (failed) ++batch.parse_warnings;
      } else if (rec[h].empty()) {
        text[s].push_back(std::nullopt);
      } else {
        text[s].push_back(rec[h]);
      }
    }
  }
  for (std::size_t s = 0; s < schema.columns.size(); ++s) {
    const auto& [name, dtype] = schema.columns[s];
    batch.columns.push_back(dtype == Dtype::kNumeric
                                ? ColumnSnapshot::Numeric(name, std::move(numeric[s]),
                                                          execution_index)
                                : ColumnSnapshot::Text(name, std::move(text[s]),
                                                       execution_index));
  }
  return batch;
}

Batch ReadBatch(const std::filesystem::path& path, const Schema& schema,
                std::uint64_t execution_index) {
  return ParseBatch(ReadFile(path), schema, execution_index, path.string());
}

const std::vector<ColumnSnapshot>& SnapshotStore::history(std::string_view column) const {
  auto it = histories.find(std::string(column));
  if (it == histories.end()) {
    throw DqError(ErrorCode::kSchema, "store has no column '" + std::string(column) + "'");
  }
  return it->second;
}

SnapshotStore Ingest(const std::filesystem::path& dir,
                     const std::filesystem::path& schema_path) {
  SnapshotStore store;
  store.root = dir;
  store.schema = LoadSchema(schema_path);
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw DqError(ErrorCode::kIo, dir.string() + " is not a directory");
  }
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      store.files.push_back(entry.path());
    }
  }
  std::sort(store.files.begin(), store.files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  for (const auto& [name, dtype] : store.schema.columns) store.histories[name];
  for (std::size_t i = 0; i < store.files.size(); ++i) {
    Batch batch = ReadBatch(store.files[i], store.schema, i);
    store.parse_warnings += batch.parse_warnings;
    for (auto& column : batch.columns) {
      store.histories[column.column_id].push_back(std::move(column));
    }
  }
  return store;
}

ColumnSnapshot ParseColumn(std::string_view csv_text, std::string_view column, Dtype dtype,
                           std::uint64_t execution_index, std::size_t* parse_warnings) {
  if (csv_text.substr(0, 3) == "\xEF\xBB\xBF") csv_text.remove_prefix(3);
  const auto records = ParseCsv(csv_text);
  if (records.empty()) throw DqError(ErrorCode::kParse, "csv: missing header row");
  const auto& header = records.front();
  auto it = std::find(header.begin(), header.end(), column);
  if (it == header.end()) {
    throw DqError(ErrorCode::kSchema, "csv: no column '" + std::string(column) + "'");
  }
  const std::size_t h = static_cast<std::size_t>(it - header.begin());
  NumericCells numeric;
  TextCells text;
  std::size_t warnings = 0;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() == 1 && rec[0].empty() && header.size() > 1) continue;
    if (rec.size() != header.size()) {
      throw DqError(ErrorCode::kParse, "csv: row " + std::to_string(r) + " has " +
                                           std::to_string(rec.size()) + " fields, expected " +
                                           std::to_string(header.size()));
    }
    if (dtype == Dtype::kNumeric) {
      bool failed = false;
      numeric.push_back(ParseNumber(rec[h], &failed));
      warnings += failed;
    } else {
      text.push_back(rec[h].empty() ? std::nullopt : std::optional<std::string>(rec[h]));
    }
  }
  if (parse_warnings != nullptr) *parse_warnings = warnings;
  const std::string id(column);
  return dtype == Dtype::kNumeric ? ColumnSnapshot::Numeric(id, std::move(numeric), execution_index)
                                  : ColumnSnapshot::Text(id, std::move(text), execution_index);
}

std::string FormatColumnCsv(const ColumnSnapshot& column) {
  std::string out = FormatCsvField(column.column_id) + "\n";
  if (column.dtype() == Dtype::kNumeric) {
    for (const auto& cell : column.numeric()) {
      if (!IsNull(cell)) out += NumberText(*cell);
      out += '\n';
    }
  } else {
    for (const auto& cell : column.text()) {
      if (!IsNull(cell)) out += FormatCsvField(*cell);
      out += '\n';
    }
  }
  return out;
}

}  // namespace dqprog
