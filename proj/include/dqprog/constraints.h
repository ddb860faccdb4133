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

#ifndef DQPROG_CONSTRAINTS_H_
#define DQPROG_CONSTRAINTS_H_

#include <optional>
#include <span>
#include <vector>

#include "dqprog/metric_id.h"
#include "dqprog/stationarity.h"

namespace dqprog {

// FPR bound assigned to a constraint whose history has zero variance.
inline constexpr double kDegenerateFprBound = 1e-9;
// Relative half-width of an equality constraint.
inline constexpr double kEqualityTolerance = 1e-9;

// theta_l <= M(C) <= theta_u on the transformed metric value.
//
// theta_l is empty for one-sided (Cantelli) constraints. When sigma == 0 the
// constraint is an equality theta_l == theta_u == mu and `beta` holds the
// tolerance half-width.
struct DqConstraint {
  MetricId metric = MetricId::kRowCount;
  TransformSpec transform;
  std::optional<double> theta_l;
  double theta_u = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double sigma = 0.0;
  double fpr_bound = 1.0;
  BoundKind bound_kind = BoundKind::kChebyshev;

  bool is_equality() const { return sigma == 0.0; }
  // Effective evaluation interval, including the equality tolerance.
  double lower() const;
  double upper() const;

  bool operator==(const DqConstraint&) const = default;
};

struct Moments {
  double mu = 0.0;
  double sigma2 = 0.0;
};

// Sample mean and (n - 1) variance. Throws kTooShort below two values.
Moments EstimateMoments(std::span<const double> values);

// Worst-case expected FPR of a constraint mu +/- beta:
//   Chebyshev  min(1, (sigma / beta)^2)
//   Cantelli   sigma^2 / (beta^2 + sigma^2)   (upper side only)
//   CLT        1 - erf(beta / (sqrt(2) sigma))
// sigma == 0 gives kDegenerateFprBound. Throws kInvalidArgument if beta <= 0.
double FprBound(BoundKind kind, double sigma, double beta);

// beta = k * sigma for k = k_min, k_min + step, ..., k_max.
struct BetaGrid {
  double k_min = 1.0;
  double k_max = 10.0;
  double step = 0.5;

  std::vector<double> multipliers() const;
};

// One constraint per (metric, beta). Series with transform kNone or fewer
// than two stationary values are skipped.
std::vector<DqConstraint> ConstructConstraints(std::span<const MetricSeries> series,
                                               const BetaGrid& grid = {});

enum class Evaluation { kSatisfied, kViolated, kViolatedNaN };

Evaluation Evaluate(const DqConstraint& q, double value);
inline bool EvaluateConstraint(const DqConstraint& q, double value) {
  return Evaluate(q, value) == Evaluation::kSatisfied;
}

}  // namespace dqprog

#endif  // DQPROG_CONSTRAINTS_H_
