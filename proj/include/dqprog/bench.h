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

#ifndef DQPROG_BENCH_H_
#define DQPROG_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dqprog/column.h"
#include "dqprog/csv_store.h"
#include "dqprog/runner.h"

namespace dqprog {

struct BenchOptions {
  std::size_t window = 30;
  double delta = 0.001;
  std::uint64_t seed = 0;
  // Fit settings; donor and master_seed are set per test.
  FitOptions fit;
};

// One precision test (clean next batch) or recall test (injected variant).
struct BenchRow {
  std::string column_id;
  std::string test_kind;  // "precision" or "recall"
  std::size_t window_start = 0;
  std::string issue_type;  // "none" for precision tests
  std::string parameter;
  bool predicted = false;  // the program reported a violation
  bool truth = false;      // the batch carries an injected issue

  bool operator==(const BenchRow&) const = default;
};

struct Counts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  void Add(const BenchRow& row);
  std::optional<double> precision() const;
  std::optional<double> recall() const;
  // Share of clean batches flagged.
  std::optional<double> fpr() const;

  bool operator==(const Counts&) const = default;
};

struct BenchResult {
  std::size_t window = 0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;
  Counts aggregate;
  std::vector<std::pair<std::string, Counts>> per_column;
  std::vector<std::pair<std::string, Counts>> per_issue_type;
  std::vector<std::string> warnings;
};

// Sliding-window precision and recall tests over every column. Columns run
// in parallel; rows are merged in column order. The SchemaChange donor of a
// column is the next column of the same dtype. Throws kTooShort when a
// history has fewer than window + 1 snapshots.
BenchResult RunBench(std::span<const std::vector<ColumnSnapshot>> histories,
                     const BenchOptions& options);
BenchResult RunBench(const SnapshotStore& store, const BenchOptions& options);

// Recomputes aggregate, per-column and per-issue-type counts from rows.
void Summarize(BenchResult& result);

std::string BenchCsv(const BenchResult& result);
std::string BenchJson(const BenchResult& result);

}  // namespace dqprog

#endif  // DQPROG_BENCH_H_
