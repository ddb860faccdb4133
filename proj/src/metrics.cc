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

#include "dqprog/metrics.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dqprog/error.h"

namespace dqprog {
namespace {

[[noreturn]] void ThrowNoData(MetricId metric) {
  throw DqError(ErrorCode::kNoData,
                std::string(MetricName(metric)) + " needs a non-null value");
}

void CheckApplicable(MetricId metric, Dtype dtype, Arity arity) {
  if (MetricArity(metric) != arity || !MetricAppliesTo(metric, dtype)) {
    throw DqError(ErrorCode::kMetricDtypeMismatch,
                  std::string(MetricName(metric)) + " on " +
                      std::string(DtypeName(dtype)) + " column");
  }
}

double Median(const std::vector<double>& sorted) {
  const std::size_t n = sorted.size();
  return n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

std::vector<double> Smoothed(std::vector<double> p) {
  const double denom = 1.0 + kDivergenceSmoothing * static_cast<double>(p.size());
  for (double& x : p) x = (x + kDivergenceSmoothing) / denom;
  return p;
}

double KlDivergence(const std::vector<double>& p, const std::vector<double>& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) d += p[i] * std::log(p[i] / q[i]);
  return std::max(0.0, d);
}

double JsDivergence(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = 0.5 * (p[i] + q[i]);
  return std::max(0.0, 0.5 * KlDivergence(p, m) + 0.5 * KlDivergence(q, m));
}

// Frequencies of two histograms over the union of their keys.
struct Aligned {
  std::vector<double> count_a, count_b;
  std::vector<double> p, q;
};

Aligned Align(const CategoryHistogram& a, const CategoryHistogram& b) {
  Aligned out;
  auto ia = a.bins.begin();
  auto ib = b.bins.begin();
  while (ia != a.bins.end() || ib != b.bins.end()) {
    if (ib == b.bins.end() || (ia != a.bins.end() && ia->first < ib->first)) {
      out.count_a.push_back(static_cast<double>(ia->second));
      out.count_b.push_back(0.0);
      ++ia;
    } else if (ia == a.bins.end() || ib->first < ia->first) {
      out.count_a.push_back(0.0);
      out.count_b.push_back(static_cast<double>(ib->second));
      ++ib;
    } else {
      out.count_a.push_back(static_cast<double>(ia->second));
      out.count_b.push_back(static_cast<double>(ib->second));
      ++ia;
      ++ib;
    }
  }
  const double ta = static_cast<double>(a.total);
  const double tb = static_cast<double>(b.total);
  out.p.reserve(out.count_a.size());
  out.q.reserve(out.count_b.size());
  for (std::size_t i = 0; i < out.count_a.size(); ++i) {
    out.p.push_back(out.count_a[i] / ta);
    out.q.push_back(out.count_b[i] / tb);
  }
  return out;
}

double ChiSquared(const Aligned& h) {
  const std::size_t k = h.count_a.size();
  double row_a = 0.0, row_b = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    row_a += h.count_a[i] + kChiSquaredSmoothing;
    row_b += h.count_b[i] + kChiSquaredSmoothing;
  }
  const double total = row_a + row_b;
  double stat = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double oa = h.count_a[i] + kChiSquaredSmoothing;
    const double ob = h.count_b[i] + kChiSquaredSmoothing;
    const double col = oa + ob;
    const double ea = row_a * col / total;
    const double eb = row_b * col / total;
    stat += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
  }
  return stat;
}

enum class Distance { kL1, kLinf, kCosine, kChiSquared, kJs, kKl };

double HistogramDistance(const CategoryHistogram& a, const CategoryHistogram& b,
                         Distance d) {
  const Aligned h = Align(a, b);
  switch (d) {
    case Distance::kL1: {
      double s = 0.0;
      for (std::size_t i = 0; i < h.p.size(); ++i) s += std::abs(h.p[i] - h.q[i]);
      return s;
    }
    case Distance::kLinf: {
      double m = 0.0;
      for (std::size_t i = 0; i < h.p.size(); ++i) {
        m = std::max(m, std::abs(h.p[i] - h.q[i]));
      }
      return m;
    }
    case Distance::kCosine: {
      double dot = 0.0, na = 0.0, nb = 0.0;
      for (std::size_t i = 0; i < h.p.size(); ++i) {
        dot += h.p[i] * h.q[i];
        na += h.p[i] * h.p[i];
        nb += h.q[i] * h.q[i];
      }
      return std::clamp(1.0 - dot / std::sqrt(na * nb), 0.0, 1.0);
    }
    case Distance::kChiSquared:
      return ChiSquared(h);
    case Distance::kJs:
      return JsDivergence(Smoothed(h.p), Smoothed(h.q));
    case Distance::kKl:
      return KlDivergence(Smoothed(h.p), Smoothed(h.q));
  }
  return 0.0;
}

// Area between the two empirical CDFs, and their largest vertical gap.
struct CdfComparison {
  double area = 0.0;
  double sup = 0.0;
};

CdfComparison CompareCdfs(const std::vector<double>& a, const std::vector<double>& b) {
  CdfComparison out;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double fa = 0.0, fb = 0.0;
  double prev = std::min(a.front(), b.front());
  while (i < a.size() || j < b.size()) {
    double x;
    if (i == a.size()) {
      x = b[j];
    } else if (j == b.size()) {
      x = a[i];
    } else {
      x = std::min(a[i], b[j]);
    }
    out.area += std::abs(fa - fb) * (x - prev);
    prev = x;
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    fa = static_cast<double>(i) / na;
    fb = static_cast<double>(j) / nb;
    out.sup = std::max(out.sup, std::abs(fa - fb));
  }
  return out;
}

std::vector<double> BinnedFrequencies(const std::vector<double>& sorted, double lo,
                                      double width) {
  std::vector<double> freq(kNumericDivergenceBins, 0.0);
  for (double x : sorted) {
    int bin = width > 0.0 ? static_cast<int>((x - lo) / width) : 0;
    bin = std::clamp(bin, 0, kNumericDivergenceBins - 1);
    freq[bin] += 1.0;
  }
  for (double& f : freq) f /= static_cast<double>(sorted.size());
  return freq;
}

double CohenD(const ColumnProfile& a, const ColumnProfile& b) {
  const double diff = std::abs(a.mean - b.mean);
  const double dof = static_cast<double>(a.non_null + b.non_null) - 2.0;
  const double pooled = dof > 0.0 ? std::sqrt((a.sq_dev + b.sq_dev) / dof) : 0.0;
  if (pooled > 0.0) return diff / pooled;
  return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

double NumericTwo(const ColumnProfile& cur, const ColumnProfile& base, MetricId metric) {
  const auto& a = cur.sorted_values;
  const auto& b = base.sorted_values;
  switch (metric) {
    case MetricId::kEmd:
      return CompareCdfs(a, b).area;
    case MetricId::kKsDist:
      return CompareCdfs(a, b).sup;
    case MetricId::kCohenD:
      return CohenD(cur, base);
    case MetricId::kJsDiv:
    case MetricId::kKlDiv: {
      const double lo = std::min(a.front(), b.front());
      const double hi = std::max(a.back(), b.back());
      const double width = (hi - lo) / kNumericDivergenceBins;
      const auto p = Smoothed(BinnedFrequencies(a, lo, width));
      const auto q = Smoothed(BinnedFrequencies(b, lo, width));
      return metric == MetricId::kJsDiv ? JsDivergence(p, q) : KlDivergence(p, q);
    }
    default:
      break;
  }
  throw DqError(ErrorCode::kMetricDtypeMismatch, std::string(MetricName(metric)));
}

double CategoricalTwo(const ColumnProfile& cur, const ColumnProfile& base,
                      MetricId metric) {
  const CategoryHistogram& va = cur.values;
  const CategoryHistogram& vb = base.values;
  const CategoryHistogram& pa = cur.patterns;
  const CategoryHistogram& pb = base.patterns;
  switch (metric) {
    case MetricId::kL1: return HistogramDistance(va, vb, Distance::kL1);
    case MetricId::kLinf: return HistogramDistance(va, vb, Distance::kLinf);
    case MetricId::kCosine: return HistogramDistance(va, vb, Distance::kCosine);
    case MetricId::kChiSquared: return HistogramDistance(va, vb, Distance::kChiSquared);
    case MetricId::kJsDiv: return HistogramDistance(va, vb, Distance::kJs);
    case MetricId::kKlDiv: return HistogramDistance(va, vb, Distance::kKl);
    case MetricId::kPatL1: return HistogramDistance(pa, pb, Distance::kL1);
    case MetricId::kPatLinf: return HistogramDistance(pa, pb, Distance::kLinf);
    case MetricId::kPatCosine: return HistogramDistance(pa, pb, Distance::kCosine);
    case MetricId::kPatChiSquared: return HistogramDistance(pa, pb, Distance::kChiSquared);
    case MetricId::kPatJsDiv: return HistogramDistance(pa, pb, Distance::kJs);
    case MetricId::kPatKlDiv: return HistogramDistance(pa, pb, Distance::kKl);
    default:
      break;
  }
  throw DqError(ErrorCode::kMetricDtypeMismatch, std::string(MetricName(metric)));
}

}  // namespace

double ComputeSingle(const ColumnProfile& p, MetricId metric) {
  CheckApplicable(metric, p.dtype, Arity::kSingle);
  const double non_null = static_cast<double>(p.non_null);
  switch (metric) {
    case MetricId::kRowCount:
      return static_cast<double>(p.rows);
    case MetricId::kCompleteRatio:
      if (p.rows == 0) ThrowNoData(metric);
      return non_null / static_cast<double>(p.rows);
    default:
      break;
  }
  if (p.non_null == 0) ThrowNoData(metric);
  switch (metric) {
    case MetricId::kMin: return p.sorted_values.front();
    case MetricId::kMax: return p.sorted_values.back();
    case MetricId::kMean: return p.mean;
    case MetricId::kMedian: return Median(p.sorted_values);
    case MetricId::kSum: return p.sum;
    case MetricId::kRange: return p.sorted_values.back() - p.sorted_values.front();
    case MetricId::kUniqueRatio: return static_cast<double>(p.distinct) / non_null;
    case MetricId::kStrLen: return static_cast<double>(p.char_count) / non_null;
    case MetricId::kCharLen: return static_cast<double>(p.letter_count) / non_null;
    case MetricId::kDigitLen: return static_cast<double>(p.digit_count) / non_null;
    case MetricId::kPuncLen: return static_cast<double>(p.punct_count) / non_null;
    case MetricId::kDistValCount: return static_cast<double>(p.distinct);
    default:
      break;
  }
  throw DqError(ErrorCode::kMetricDtypeMismatch, std::string(MetricName(metric)));
}

double ComputeSingle(const ColumnSnapshot& snapshot, MetricId metric) {
  CheckApplicable(metric, snapshot.dtype(), Arity::kSingle);
  return ComputeSingle(Profile(snapshot), metric);
}

double ComputeTwo(const ColumnProfile& current, const ColumnProfile& baseline,
                  MetricId metric) {
  if (current.dtype != baseline.dtype) {
    throw DqError(ErrorCode::kMetricDtypeMismatch,
                  "current and baseline dtypes differ");
  }
  CheckApplicable(metric, current.dtype, Arity::kTwo);
  if (current.non_null == 0 || baseline.non_null == 0) ThrowNoData(metric);
  return current.dtype == Dtype::kNumeric ? NumericTwo(current, baseline, metric)
                                          : CategoricalTwo(current, baseline, metric);
}

double ComputeTwo(const ColumnSnapshot& current, const ColumnSnapshot& baseline,
                  MetricId metric) {
  if (current.dtype() != baseline.dtype()) {
    throw DqError(ErrorCode::kMetricDtypeMismatch,
                  "current and baseline dtypes differ");
  }
  CheckApplicable(metric, current.dtype(), Arity::kTwo);
  return ComputeTwo(Profile(current), Profile(baseline), metric);
}

CategoryHistogram PatternHistogram(const ColumnSnapshot& snapshot) {
  if (snapshot.dtype() != Dtype::kCategorical) {
    throw DqError(ErrorCode::kMetricDtypeMismatch,
                  "pattern histogram needs a categorical column");
  }
  ColumnProfile p = Profile(snapshot);
  if (p.non_null == 0) {
    throw DqError(ErrorCode::kNoData, "pattern histogram of an all-null column");
  }
  return std::move(p.patterns);
}

}  // namespace dqprog
