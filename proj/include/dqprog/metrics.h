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

#ifndef DQPROG_METRICS_H_
#define DQPROG_METRICS_H_

#include "dqprog/column.h"
#include "dqprog/kernels.h"
#include "dqprog/metric_id.h"

namespace dqprog {

// Number of equal-width bins for numeric JS/KL divergence.
inline constexpr int kNumericDivergenceBins = 10;
// Additive smoothing on normalized frequencies before JS/KL.
inline constexpr double kDivergenceSmoothing = 1e-10;
// Additive smoothing on every contingency cell before Chi-squared.
inline constexpr double kChiSquaredSmoothing = 0.5;

// Single-distribution metric of one snapshot.
//
// Nulls are excluded from value statistics; row_count counts every row and
// complete_ratio divides by it. Throws DqError with kMetricDtypeMismatch for
// a metric that does not apply (or has the wrong arity) and kNoData when the
// statistic needs at least one non-null cell.
double ComputeSingle(const ColumnSnapshot& snapshot, MetricId metric);
double ComputeSingle(const ColumnProfile& profile, MetricId metric);

// Two-distribution metric comparing `current` against `baseline`. All
// distances are 0 for identical inputs.
double ComputeTwo(const ColumnSnapshot& current, const ColumnSnapshot& baseline,
                  MetricId metric);
double ComputeTwo(const ColumnProfile& current, const ColumnProfile& baseline,
                  MetricId metric);

// Histogram of GeneratePattern over the non-null cells.
CategoryHistogram PatternHistogram(const ColumnSnapshot& snapshot);

}  // namespace dqprog

#endif  // DQPROG_METRICS_H_
