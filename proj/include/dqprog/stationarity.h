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

#ifndef DQPROG_STATIONARITY_H_
#define DQPROG_STATIONARITY_H_

#include <span>
#include <string>
#include <vector>

#include "dqprog/metric_id.h"

namespace dqprog {

struct TransformSpec {
  enum class Kind { kIdentity, kLag, kLogThenLag, kNone };

  Kind kind = Kind::kIdentity;
  int lag = 0;  // > 0 for kLag / kLogThenLag
  std::size_t source_length = 0;

  static TransformSpec Identity(std::size_t n) { return {Kind::kIdentity, 0, n}; }
  static TransformSpec Lag(int l, std::size_t n) { return {Kind::kLag, l, n}; }
  static TransformSpec LogThenLag(int l, std::size_t n) {
    return {Kind::kLogThenLag, l, n};
  }
  static TransformSpec None(std::size_t n) { return {Kind::kNone, 0, n}; }

  // Number of trailing raw values a new point needs.
  int tail_length() const {
    return kind == Kind::kLag || kind == Kind::kLogThenLag ? lag : 0;
  }

  bool operator==(const TransformSpec&) const = default;
};

std::string TransformName(TransformSpec::Kind kind);
TransformSpec::Kind ParseTransformKind(std::string_view name);
// "identity", "lag 7", "log, lag 1", "none".
std::string DescribeTransform(const TransformSpec& spec);

struct MetricSeries {
  MetricId metric = MetricId::kRowCount;
  std::vector<double> raw;
  TransformSpec transform;
  std::vector<double> stationary;
};

struct AdfResult {
  double statistic = 0.0;
  bool is_stationary = false;
};

struct StationarityOptions {
  int max_lag = 7;
  // Asymptotic 5% critical value, constant-only regression.
  double critical_value = -2.86;
};

inline constexpr std::size_t kMinAdfLength = 8;

// Augmented Dickey-Fuller test with a constant and one lagged difference,
// fitted by least squares. A constant series is reported stationary with
// statistic -inf. Throws kNonFinite or kTooShort.
AdfResult AdfTest(std::span<const double> series,
                  double critical_value = StationarityOptions{}.critical_value);

// out[i] = series[i + lag] - series[i]. Throws kInvalidArgument when
// lag < 1 or lag >= series.size().
std::vector<double> LagTransform(std::span<const double> series, int lag);

struct StationaryFit {
  TransformSpec transform;
  std::vector<double> stationary;
};

// Identity if the raw series passes, else the first passing lag without log,
// else the first passing lag on ln(raw) (only when every value is positive),
// else kNone with an empty series.
StationaryFit MakeStationary(std::span<const double> raw,
                             const StationarityOptions& options = {});

// Applies a fitted transform to one new raw value. `raw_tail` holds at least
// spec.tail_length() trailing raw (pre-log) values, oldest first. Throws
// kNonPositiveUnderLog for a non-positive value under a log transform.
double TransformNewPoint(const TransformSpec& spec, std::span<const double> raw_tail,
                         double new_value);

// True when every value equals the first up to a 1e-12 relative tolerance.
bool IsConstantSeries(std::span<const double> series);

}  // namespace dqprog

#endif  // DQPROG_STATIONARITY_H_
