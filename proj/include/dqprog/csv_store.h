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

#ifndef DQPROG_CSV_STORE_H_
#define DQPROG_CSV_STORE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dqprog/column.h"

namespace dqprog {

// Column name -> dtype, in file order.
struct Schema {
  std::vector<std::pair<std::string, Dtype>> columns;

  const Dtype* find(std::string_view name) const;
};

// Parses {"col": "numeric" | "categorical", ...}.
Schema ParseSchema(std::string_view json_text);
Schema LoadSchema(const std::filesystem::path& path);

// RFC 4180 records: quoted fields, doubled quotes, CRLF or LF line ends.
std::vector<std::vector<std::string>> ParseCsv(std::string_view text);
std::string FormatCsvField(std::string_view field);

struct Batch {
  std::vector<ColumnSnapshot> columns;  // schema order
  std::size_t parse_warnings = 0;

  const ColumnSnapshot* find(std::string_view column) const;
};

// Reads one CSV file. Header names are matched against the schema by name;
// an unknown header or a schema column missing from the header is an error.
// Empty cells are null; unparseable numeric cells become null and are counted.
Batch ParseBatch(std::string_view csv_text, const Schema& schema,
                 std::uint64_t execution_index = 0, std::string_view origin = "batch");
Batch ReadBatch(const std::filesystem::path& path, const Schema& schema,
                std::uint64_t execution_index = 0);

struct SnapshotStore {
  std::filesystem::path root;
  Schema schema;
  std::vector<std::filesystem::path> files;  // execution order
  std::map<std::string, std::vector<ColumnSnapshot>> histories;
  std::size_t parse_warnings = 0;

  const std::vector<ColumnSnapshot>& history(std::string_view column) const;
};

// Every *.csv file in `dir`, sorted by file name, is one execution.
SnapshotStore Ingest(const std::filesystem::path& dir, const std::filesystem::path& schema_path);

// Extracts one column by header name, ignoring the rest of the file.
ColumnSnapshot ParseColumn(std::string_view csv_text, std::string_view column, Dtype dtype,
                           std::uint64_t execution_index = 0,
                           std::size_t* parse_warnings = nullptr);

// Single-column CSV (header + one cell per row).
std::string FormatColumnCsv(const ColumnSnapshot& column);

}  // namespace dqprog

#endif  // DQPROG_CSV_STORE_H_
