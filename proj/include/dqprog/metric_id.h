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

#ifndef DQPROG_METRIC_ID_H_
#define DQPROG_METRIC_ID_H_

#include <span>
#include <string_view>

#include "dqprog/column.h"

namespace dqprog {

// The metric catalog. Shared names (row_count, JS_div, ...) are one id whose
// computation dispatches on the column dtype.
enum class MetricId {
  kMin,
  kMax,
  kMean,
  kMedian,
  kSum,
  kRange,
  kRowCount,
  kUniqueRatio,
  kCompleteRatio,
  kStrLen,
  kCharLen,
  kDigitLen,
  kPuncLen,
  kDistValCount,
  kEmd,
  kKsDist,
  kCohenD,
  kJsDiv,
  kKlDiv,
  kL1,
  kLinf,
  kCosine,
  kChiSquared,
  kPatL1,
  kPatLinf,
  kPatCosine,
  kPatChiSquared,
  kPatJsDiv,
  kPatKlDiv,
};

enum class Arity { kSingle, kTwo };

// Tail bound used to price a constraint on this metric.
enum class BoundKind { kChebyshev, kCantelli, kClt };

std::string_view MetricName(MetricId id);
// Throws DqError(kParse) on an unknown name.
MetricId ParseMetric(std::string_view name);

Arity MetricArity(MetricId id);
BoundKind MetricBoundKind(MetricId id);
bool MetricAppliesTo(MetricId id, Dtype dtype);

std::string_view BoundKindName(BoundKind kind);
BoundKind ParseBoundKind(std::string_view name);

// Catalog order for one dtype.
std::span<const MetricId> MetricsFor(Dtype dtype);

}  // namespace dqprog

#endif  // DQPROG_METRIC_ID_H_
