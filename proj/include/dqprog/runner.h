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

#ifndef DQPROG_RUNNER_H_
#define DQPROG_RUNNER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dqprog/column.h"
#include "dqprog/constraints.h"
#include "dqprog/kernels.h"
#include "dqprog/program.h"
#include "dqprog/stationarity.h"
#include "dqprog/synthesis.h"

namespace dqprog {

inline constexpr std::size_t kMinHistoryLength = 8;

struct FitOptions {
  bool single_dist_only = false;
  std::size_t max_clauses = kNoClauseLimit;
  std::uint64_t master_seed = 0;
  BetaGrid beta_grid;
  StationarityOptions stationarity;
  // Same-dtype column snapshot used by SchemaChange variants; may be null.
  const ColumnSnapshot* donor = nullptr;
};

struct FitResult {
  DqProgram program;
  std::vector<std::string> warnings;
  // Stationary series the candidates were built from.
  std::vector<MetricSeries> series;
  std::size_t corpus_size = 0;
};

// Raw metric series over a history: one value per snapshot for
// single-distribution metrics, one per consecutive pair for the others.
std::vector<double> RawMetricSeries(std::span<const ColumnProfile> profiles, MetricId metric);

FitResult FitDetailed(std::span<const ColumnSnapshot> history, double delta,
                      const FitOptions& options = {});
inline DqProgram Fit(std::span<const ColumnSnapshot> history, double delta,
                     const FitOptions& options = {}) {
  return FitDetailed(history, delta, options).program;
}

struct ConstraintRecord {
  std::string metric;
  std::string transform;
  // Transformed metric value; empty when it could not be computed.
  std::optional<double> observed;
  std::optional<double> theta_l;
  double theta_u = 0.0;
  double fpr_bound = 0.0;
  bool satisfied = false;
  std::string note;
};

enum class Verdict { kPass, kViolation };

struct ValidationReport {
  std::string column_id;
  Verdict verdict = Verdict::kPass;
  std::vector<ConstraintRecord> records;
  double fpr_total = 0.0;
  double delta = 0.0;
};

// Validates `batch` against `program`. `baseline` is the last accepted
// snapshot. Throws kMetricDtypeMismatch when either dtype differs from the
// program's.
ValidationReport Check(const DqProgram& program, const ColumnSnapshot& batch,
                       const ColumnSnapshot& baseline);

// Rolls the stored raw tails forward by one accepted batch. Throws
// kContractViolation when the batch does not pass Check.
DqProgram Advance(const DqProgram& program, const ColumnSnapshot& accepted,
                  const ColumnSnapshot& baseline);

std::string RenderReport(const ValidationReport& report);

}  // namespace dqprog

#endif  // DQPROG_RUNNER_H_
