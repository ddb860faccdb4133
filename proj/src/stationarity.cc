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

#include "dqprog/stationarity.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dqprog/error.h"

namespace dqprog {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckFinite(std::span<const double> series) {
  for (double v : series) {
    if (!std::isfinite(v)) {
      throw DqError(ErrorCode::kNonFinite, "series contains a non-finite value");
    }
  }
}

Eigen::Index Rank(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return 0;
  return Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(m).rank();
}

// Columns of `m` forming a basis of its column space, in pivot order.
Eigen::MatrixXd IndependentColumns(const Eigen::MatrixXd& m) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  const Eigen::Index rank = qr.rank();
  Eigen::MatrixXd out(m.rows(), rank);
  for (Eigen::Index i = 0; i < rank; ++i) {
    out.col(i) = m.col(qr.colsPermutation().indices()(i));
  }
  return out;
}

}  // namespace

std::string TransformName(TransformSpec::Kind kind) {
  switch (kind) {
    case TransformSpec::Kind::kIdentity: return "identity";
    case TransformSpec::Kind::kLag: return "lag";
    case TransformSpec::Kind::kLogThenLag: return "log_lag";
    case TransformSpec::Kind::kNone: return "none";
  }
  return "";
}

TransformSpec::Kind ParseTransformKind(std::string_view name) {
  for (auto k : {TransformSpec::Kind::kIdentity, TransformSpec::Kind::kLag,
                 TransformSpec::Kind::kLogThenLag, TransformSpec::Kind::kNone}) {
    if (TransformName(k) == name) return k;
  }
  throw DqError(ErrorCode::kParse, "unknown transform '" + std::string(name) + "'");
}

std::string DescribeTransform(const TransformSpec& spec) {
  switch (spec.kind) {
    case TransformSpec::Kind::kIdentity: return "identity";
    case TransformSpec::Kind::kLag: return "lag " + std::to_string(spec.lag);
    case TransformSpec::Kind::kLogThenLag: return "log, lag " + std::to_string(spec.lag);
    case TransformSpec::Kind::kNone: return "none";
  }
  return "";
}

bool IsConstantSeries(std::span<const double> series) {
  if (series.empty()) return true;
  const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
  const double scale = std::max({1.0, std::abs(*lo), std::abs(*hi)});
  return *hi - *lo <= 1e-12 * scale;
}

AdfResult AdfTest(std::span<const double> series, double critical_value) {
  CheckFinite(series);
  if (IsConstantSeries(series)) return {-kInf, true};
  if (series.size() < kMinAdfLength) {
    throw DqError(ErrorCode::kTooShort, "ADF needs at least 8 observations, got " +
                                            std::to_string(series.size()));
  }
  // dy_t = a + g * y_{t-1} + f * dy_{t-1}, t = 2..n-1.
  const Eigen::Index nobs = static_cast<Eigen::Index>(series.size()) - 2;
  Eigen::VectorXd dep(nobs);
  Eigen::VectorXd level(nobs);
  Eigen::MatrixXd others(nobs, 2);
  for (Eigen::Index r = 0; r < nobs; ++r) {
    const std::size_t t = static_cast<std::size_t>(r) + 2;
    dep(r) = series[t] - series[t - 1];
    level(r) = series[t - 1];
    others(r, 0) = 1.0;
    others(r, 1) = series[t - 1] - series[t - 2];
  }

  // The level coefficient is estimable only if the level column adds rank.
  const Eigen::MatrixXd basis = IndependentColumns(others);
  Eigen::MatrixXd design(nobs, basis.cols() + 1);
  design << level, basis;
  if (Rank(design) != basis.cols() + 1) return {0.0, false};

  const Eigen::Index k = design.cols();
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  const Eigen::VectorXd beta = qr.solve(dep);
  const Eigen::VectorXd resid = dep - design * beta;
  const double sse = resid.squaredNorm();
  const double gamma = beta(0);
  const double dof = static_cast<double>(nobs - k);

  AdfResult out;
  if (sse <= 1e-20 * std::max(1.0, dep.squaredNorm()) || dof <= 0.0) {
    // Exact fit: the sign of the level coefficient decides.
    out.statistic = gamma < -1e-8 ? -kInf : 0.0;
  } else {
    const Eigen::MatrixXd xtx = design.transpose() * design;
    const double var_gamma = (sse / dof) * xtx.inverse()(0, 0);
    out.statistic = gamma / std::sqrt(var_gamma);
  }
  out.is_stationary = out.statistic < critical_value;
  return out;
}

std::vector<double> LagTransform(std::span<const double> series, int lag) {
  if (lag < 1 || static_cast<std::size_t>(lag) >= series.size()) {
    throw DqError(ErrorCode::kInvalidArgument,
                  "lag " + std::to_string(lag) + " needs a longer series than " +
                      std::to_string(series.size()));
  }
  std::vector<double> out(series.size() - lag);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = series[i + lag] - series[i];
  return out;
}

StationaryFit MakeStationary(std::span<const double> raw,
                             const StationarityOptions& options) {
  CheckFinite(raw);
  const std::size_t n = raw.size();
  if (IsConstantSeries(raw)) {
    return {TransformSpec::Identity(n), std::vector<double>(raw.begin(), raw.end())};
  }
  if (n < kMinAdfLength) {
    throw DqError(ErrorCode::kTooShort,
                  "stationarity needs at least 8 values, got " + std::to_string(n));
  }
  if (AdfTest(raw, options.critical_value).is_stationary) {
    return {TransformSpec::Identity(n), std::vector<double>(raw.begin(), raw.end())};
  }

  const int max_lag = std::min(static_cast<int>(n) - 1, options.max_lag);
  auto sweep = [&](std::span<const double> base, bool logged) -> std::optional<StationaryFit> {
    for (int lag = 1; lag <= max_lag; ++lag) {
      std::vector<double> diff = LagTransform(base, lag);
      // Too few points to judge, even when they happen to be equal.
      if (diff.size() < kMinAdfLength) continue;
      if (AdfTest(diff, options.critical_value).is_stationary) {
        return StationaryFit{logged ? TransformSpec::LogThenLag(lag, n)
                                    : TransformSpec::Lag(lag, n),
                             std::move(diff)};
      }
    }
    return std::nullopt;
  };

  if (auto fit = sweep(raw, false)) return *std::move(fit);
  if (std::all_of(raw.begin(), raw.end(), [](double v) { return v > 0.0; })) {
    std::vector<double> logs(n);
    std::transform(raw.begin(), raw.end(), logs.begin(), [](double v) { return std::log(v); });
    if (auto fit = sweep(logs, true)) return *std::move(fit);
  }
  return {TransformSpec::None(n), {}};
}

double TransformNewPoint(const TransformSpec& spec, std::span<const double> raw_tail,
                         double new_value) {
  switch (spec.kind) {
    case TransformSpec::Kind::kIdentity:
      return new_value;
    case TransformSpec::Kind::kNone:
      throw DqError(ErrorCode::kInvalidArgument, "metric has no stationary transform");
    case TransformSpec::Kind::kLag:
    case TransformSpec::Kind::kLogThenLag:
      break;
  }
  if (raw_tail.size() < static_cast<std::size_t>(spec.lag)) {
    throw DqError(ErrorCode::kInvalidArgument,
                  "transform needs " + std::to_string(spec.lag) + " trailing values");
  }
  const double prior = raw_tail[raw_tail.size() - spec.lag];
  if (spec.kind == TransformSpec::Kind::kLag) return new_value - prior;
  if (!(new_value > 0.0)) {
    throw DqError(ErrorCode::kNonPositiveUnderLog,
                  "value " + std::to_string(new_value) + " under log transform");
  }
  return std::log(new_value) - std::log(prior);
}

}  // namespace dqprog
