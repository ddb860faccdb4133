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

#include "dqprog/metric_id.h"

#include <array>
#include <string>

#include "dqprog/error.h"

namespace dqprog {
namespace {

struct MetricInfo {
  MetricId id;
  std::string_view name;
  Arity arity;
  BoundKind bound;
  bool numeric;
  bool categorical;
};

constexpr Arity S = Arity::kSingle;
constexpr Arity T = Arity::kTwo;
constexpr BoundKind kCheb = BoundKind::kChebyshev;
constexpr BoundKind kCant = BoundKind::kCantelli;
constexpr BoundKind kClt = BoundKind::kClt;

constexpr std::array<MetricInfo, 29> kCatalog = {{
    {MetricId::kMin, "min", S, kCheb, true, false},
    {MetricId::kMax, "max", S, kCheb, true, false},
    {MetricId::kMean, "mean", S, kClt, true, false},
    {MetricId::kMedian, "median", S, kCheb, true, false},
    {MetricId::kSum, "sum", S, kCheb, true, false},
    {MetricId::kRange, "range", S, kCheb, true, false},
    {MetricId::kRowCount, "row_count", S, kClt, true, true},
    {MetricId::kUniqueRatio, "unique_ratio", S, kCheb, true, true},
    {MetricId::kCompleteRatio, "complete_ratio", S, kClt, true, true},
    {MetricId::kStrLen, "str_len", S, kClt, false, true},
    {MetricId::kCharLen, "char_len", S, kClt, false, true},
    {MetricId::kDigitLen, "digit_len", S, kClt, false, true},
    {MetricId::kPuncLen, "punc_len", S, kClt, false, true},
    {MetricId::kDistValCount, "dist_val_count", S, kCheb, false, true},
    {MetricId::kEmd, "EMD", T, kCant, true, false},
    {MetricId::kKsDist, "KS_dist", T, kCant, true, false},
    {MetricId::kCohenD, "Cohen_d", T, kCant, true, false},
    {MetricId::kJsDiv, "JS_div", T, kCant, true, true},
    {MetricId::kKlDiv, "KL_div", T, kCant, true, true},
    {MetricId::kL1, "L1", T, kCant, false, true},
    {MetricId::kLinf, "Linf", T, kCant, false, true},
    {MetricId::kCosine, "Cosine", T, kCant, false, true},
    {MetricId::kChiSquared, "Chi_squared", T, kCant, false, true},
    {MetricId::kPatL1, "Pat_L1", T, kCant, false, true},
    {MetricId::kPatLinf, "Pat_Linf", T, kCant, false, true},
    {MetricId::kPatCosine, "Pat_Cosine", T, kCant, false, true},
    {MetricId::kPatChiSquared, "Pat_Chisquare", T, kCant, false, true},
    {MetricId::kPatJsDiv, "Pat_JS_div", T, kCant, false, true},
    {MetricId::kPatKlDiv, "Pat_KL_div", T, kCant, false, true},
}};

const MetricInfo& Info(MetricId id) {
  return kCatalog[static_cast<std::size_t>(id)];
}

template <bool kNumeric>
constexpr auto BuildList() {
  constexpr std::size_t n = [] {
    std::size_t c = 0;
    for (const auto& m : kCatalog) c += (kNumeric ? m.numeric : m.categorical);
    return c;
  }();
  std::array<MetricId, n> out{};
  std::size_t i = 0;
  for (const auto& m : kCatalog) {
    if (kNumeric ? m.numeric : m.categorical) out[i++] = m.id;
  }
  return out;
}

constexpr auto kNumericMetrics = BuildList<true>();
constexpr auto kCategoricalMetrics = BuildList<false>();

}  // namespace

std::string_view MetricName(MetricId id) { return Info(id).name; }

MetricId ParseMetric(std::string_view name) {
  for (const auto& m : kCatalog) {
    if (m.name == name) return m.id;
  }
  throw DqError(ErrorCode::kParse, "unknown metric '" + std::string(name) + "'");
}

Arity MetricArity(MetricId id) { return Info(id).arity; }

BoundKind MetricBoundKind(MetricId id) { return Info(id).bound; }

bool MetricAppliesTo(MetricId id, Dtype dtype) {
  return dtype == Dtype::kNumeric ? Info(id).numeric : Info(id).categorical;
}

std::string_view BoundKindName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kChebyshev: return "chebyshev";
    case BoundKind::kCantelli: return "cantelli";
    case BoundKind::kClt: return "clt";
  }
  return "";
}

BoundKind ParseBoundKind(std::string_view name) {
  if (name == "chebyshev") return BoundKind::kChebyshev;
  if (name == "cantelli") return BoundKind::kCantelli;
  if (name == "clt") return BoundKind::kClt;
  throw DqError(ErrorCode::kParse,
                "unknown bound kind '" + std::string(name) + "'");
}

std::span<const MetricId> MetricsFor(Dtype dtype) {
  if (dtype == Dtype::kNumeric) return kNumericMetrics;
  return kCategoricalMetrics;
}

}  // namespace dqprog
