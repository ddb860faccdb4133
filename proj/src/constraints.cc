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

#include "dqprog/constraints.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dqprog/error.h"

namespace dqprog {

double DqConstraint::lower() const {
  if (is_equality()) return mu - beta;
  return theta_l ? *theta_l : -std::numeric_limits<double>::infinity();
}

double DqConstraint::upper() const { return is_equality() ? mu + beta : theta_u; }

Moments EstimateMoments(std::span<const double> values) {
  if (values.size() < 2) {
    throw DqError(ErrorCode::kTooShort, "moments need at least two values");
  }
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mu = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mu) * (v - mu);
  return {mu, ss / (n - 1.0)};
}

double FprBound(BoundKind kind, double sigma, double beta) {
  if (!(beta > 0.0)) {
    throw DqError(ErrorCode::kInvalidArgument, "beta must be positive");
  }
  if (sigma < 0.0) {
    throw DqError(ErrorCode::kInvalidArgument, "sigma must be non-negative");
  }
  if (sigma == 0.0) return kDegenerateFprBound;
  // Expressed through k = beta / sigma, the width in standard deviations.
  const double k = beta / sigma;
  switch (kind) {
    case BoundKind::kChebyshev:
      return std::min(1.0, 1.0 / (k * k));
    case BoundKind::kCantelli:
      return 1.0 / (1.0 + k * k);
    case BoundKind::kClt:
      return std::erfc(k / std::sqrt(2.0));
  }
  return 1.0;
}

std::vector<double> BetaGrid::multipliers() const {
  if (!(step > 0.0) || !(k_min > 0.0) || k_max < k_min) {
    throw DqError(ErrorCode::kInvalidArgument, "bad beta grid");
  }
  std::vector<double> out;
  const int steps = static_cast<int>(std::floor((k_max - k_min) / step + 1e-9));
  for (int i = 0; i <= steps; ++i) out.push_back(k_min + step * i);
  return out;
}

std::vector<DqConstraint> ConstructConstraints(std::span<const MetricSeries> series,
                                               const BetaGrid& grid) {
  const std::vector<double> ks = grid.multipliers();
  std::vector<DqConstraint> out;
  for (const MetricSeries& s : series) {
    if (s.transform.kind == TransformSpec::Kind::kNone || s.stationary.size() < 2) {
      continue;
    }
    const Moments m = EstimateMoments(s.stationary);
    double sigma = std::sqrt(m.sigma2);
    const BoundKind kind = MetricBoundKind(s.metric);
    DqConstraint base;
    base.metric = s.metric;
    base.transform = s.transform;
    base.mu = m.mu;
    base.bound_kind = kind;

    if (sigma <= 1e-12 * std::max(1.0, std::abs(m.mu))) {
      DqConstraint q = base;
      q.sigma = 0.0;
      q.beta = kEqualityTolerance * std::max(1.0, std::abs(m.mu));
      q.theta_l = m.mu;
      q.theta_u = m.mu;
      q.fpr_bound = kDegenerateFprBound;
      out.push_back(q);
      continue;
    }
    for (double k : ks) {
      DqConstraint q = base;
      q.sigma = sigma;
      q.beta = k * sigma;
      if (kind != BoundKind::kCantelli) q.theta_l = m.mu - q.beta;
      q.theta_u = m.mu + q.beta;
      q.fpr_bound = FprBound(kind, sigma, q.beta);
      out.push_back(q);
    }
  }
  return out;
}

Evaluation Evaluate(const DqConstraint& q, double value) {
  if (std::isnan(value)) return Evaluation::kViolatedNaN;
  return value >= q.lower() && value <= q.upper() ? Evaluation::kSatisfied
                                                  : Evaluation::kViolated;
}

}  // namespace dqprog
