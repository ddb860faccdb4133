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

#include "dqprog/runner.h"

#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "dqprog/error.h"
#include "dqprog/metrics.h"

namespace dqprog {
namespace {

void ValidateHistory(std::span<const ColumnSnapshot> history, double delta) {
  if (history.size() < kMinHistoryLength) {
    throw DqError(ErrorCode::kTooShort,
                  "history has " + std::to_string(history.size()) +
                      " snapshots; at least " + std::to_string(kMinHistoryLength) +
                      " are required");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DqError(ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  }
  const Dtype dtype = history.front().dtype();
  for (std::size_t i = 1; i < history.size(); ++i) {
    if (history[i].dtype() != dtype) {
      throw DqError(ErrorCode::kMetricDtypeMismatch,
                    "history mixes numeric and categorical snapshots");
    }
    if (history[i].execution_index <= history[i - 1].execution_index) {
      throw DqError(ErrorCode::kInvalidArgument,
                    "history is not in increasing execution order");
    }
  }
}

std::vector<double> Tail(std::span<const double> raw, int length) {
  const std::size_t n = std::min<std::size_t>(raw.size(), static_cast<std::size_t>(length));
  return {raw.end() - static_cast<std::ptrdiff_t>(n), raw.end()};
}

struct RawValue {
  std::optional<double> value;
  std::string note;
};

RawValue ComputeRaw(MetricId metric, const ColumnProfile& batch,
                    const ColumnProfile* baseline) {
  try {
    const double v = MetricArity(metric) == Arity::kSingle
                         ? ComputeSingle(batch, metric)
                         : ComputeTwo(batch, *baseline, metric);
    return {v, ""};
  } catch (const DqError& e) {
    if (e.code() != ErrorCode::kNoData) throw;
    return {std::nullopt, "no data"};
  }
}

void CheckDtype(const DqProgram& program, const ColumnSnapshot& snapshot,
                const char* role) {
  if (snapshot.dtype() != program.dtype) {
    throw DqError(ErrorCode::kMetricDtypeMismatch,
                  std::string(role) + " is " + std::string(DtypeName(snapshot.dtype())) +
                      " but the program was fitted on a " +
                      std::string(DtypeName(program.dtype)) + " column");
  }
}

const std::vector<double>& TailFor(const DqProgram& program, MetricId metric) {
  static const std::vector<double> kEmpty;
  auto it = program.transform_context.find(metric);
  return it == program.transform_context.end() ? kEmpty : it->second;
}

std::string FormatNumber(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::vector<double> RawMetricSeries(std::span<const ColumnProfile> profiles,
                                    MetricId metric) {
  std::vector<double> out;
  if (MetricArity(metric) == Arity::kSingle) {
    out.reserve(profiles.size());
    for (const auto& p : profiles) out.push_back(ComputeSingle(p, metric));
  } else {
    for (std::size_t i = 1; i < profiles.size(); ++i) {
      out.push_back(ComputeTwo(profiles[i], profiles[i - 1], metric));
    }
  }
  return out;
}

FitResult FitDetailed(std::span<const ColumnSnapshot> history, double delta,
                      const FitOptions& options) {
  ValidateHistory(history, delta);
  const ColumnSnapshot& last = history.back();
  FitResult result;
  DqProgram& program = result.program;
  program.column_id = last.column_id;
  program.dtype = last.dtype();
  program.delta = delta;

  std::vector<ColumnProfile> profiles;
  profiles.reserve(history.size());
  for (const auto& snapshot : history) profiles.push_back(Profile(snapshot));

  for (MetricId metric : MetricsFor(program.dtype)) {
    if (options.single_dist_only && MetricArity(metric) == Arity::kTwo) continue;
    MetricSeries s;
    s.metric = metric;
    try {
      s.raw = RawMetricSeries(profiles, metric);
      StationaryFit fit = MakeStationary(s.raw, options.stationarity);
      if (fit.transform.kind == TransformSpec::Kind::kNone) continue;
      s.transform = fit.transform;
      s.stationary = std::move(fit.stationary);
    } catch (const DqError&) {
      // Missing data, non-finite values or too few points: not a candidate.
      continue;
    }
    result.series.push_back(std::move(s));
  }
  if (result.series.empty()) {
    result.warnings.push_back("column '" + program.column_id +
                              "': no metric series is stationary; the program is empty");
    return result;
  }

  const std::vector<DqConstraint> candidates =
      ConstructConstraints(result.series, options.beta_grid);

  // Recall is estimated on variants of the last snapshot, scored as if they
  // arrived in its place after the second-to-last one.
  std::map<MetricId, TransformSpec> transforms;
  TransformContext scoring_tails;
  for (const auto& s : result.series) {
    transforms[s.metric] = s.transform;
    scoring_tails[s.metric] = Tail(std::span(s.raw).first(s.raw.size() - 1),
                                   s.transform.tail_length());
  }
  CorpusPlan plan = PlanCorpus(last, options.donor, options.master_seed);
  for (auto& w : plan.warnings) result.warnings.push_back(std::move(w));
  std::vector<ColumnProfile> variant_profiles(plan.specs.size());
  const std::int64_t n = static_cast<std::int64_t>(plan.specs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    variant_profiles[i] = Profile(Inject(last, plan.specs[i], options.donor));
  }
  result.corpus_size = plan.specs.size();
  const VariantScores scores = ScoreVariants(variant_profiles, profiles[profiles.size() - 2],
                                             transforms, scoring_tails);
  std::vector<std::vector<std::size_t>> recall_sets;
  recall_sets.reserve(candidates.size());
  for (const auto& q : candidates) recall_sets.push_back(RecallSet(q, scores));

  DqProgram selected = GreedySelect(candidates, recall_sets, delta, options.max_clauses);
  program.fpr_total = selected.fpr_total;
  program.recall_covered = selected.recall_covered;
  program.constraints = std::move(selected.constraints);
  for (const auto& q : program.constraints) {
    for (const auto& s : result.series) {
      if (s.metric == q.metric) {
        program.transform_context[q.metric] = Tail(s.raw, q.transform.tail_length());
      }
    }
  }
  return result;
}

ValidationReport Check(const DqProgram& program, const ColumnSnapshot& batch,
                       const ColumnSnapshot& baseline) {
  CheckDtype(program, batch, "batch");
  CheckDtype(program, baseline, "baseline");
  ValidationReport report;
  report.column_id = program.column_id;
  report.fpr_total = program.fpr_total;
  report.delta = program.delta;
  if (program.constraints.empty()) return report;

  const ColumnProfile batch_profile = Profile(batch);
  std::optional<ColumnProfile> baseline_profile;
  std::map<MetricId, RawValue> cache;
  for (const auto& q : program.constraints) {
    auto it = cache.find(q.metric);
    if (it == cache.end()) {
      if (MetricArity(q.metric) == Arity::kTwo && !baseline_profile) {
        baseline_profile = Profile(baseline);
      }
      it = cache.emplace(q.metric, ComputeRaw(q.metric, batch_profile,
                                              baseline_profile ? &*baseline_profile : nullptr))
               .first;
    }
    ConstraintRecord rec;
    rec.metric = std::string(MetricName(q.metric));
    rec.transform = DescribeTransform(q.transform);
    rec.theta_l = q.theta_l;
    rec.theta_u = q.theta_u;
    rec.fpr_bound = q.fpr_bound;
    rec.note = it->second.note;
    if (it->second.value) {
      try {
        rec.observed = TransformNewPoint(q.transform, TailFor(program, q.metric),
                                         *it->second.value);
      } catch (const DqError& e) {
        if (e.code() != ErrorCode::kNonPositiveUnderLog) throw;
        rec.note = "non-positive value under log";
      }
    }
    if (rec.observed) {
      const Evaluation ev = Evaluate(q, *rec.observed);
      rec.satisfied = ev == Evaluation::kSatisfied;
      if (ev == Evaluation::kViolatedNaN) rec.note = "not a number";
    }
    if (!rec.satisfied) report.verdict = Verdict::kViolation;
    report.records.push_back(std::move(rec));
  }
  return report;
}

DqProgram Advance(const DqProgram& program, const ColumnSnapshot& accepted,
                  const ColumnSnapshot& baseline) {
  const ValidationReport report = Check(program, accepted, baseline);
  if (report.verdict != Verdict::kPass) {
    throw DqError(ErrorCode::kContractViolation,
                  "cannot advance column '" + program.column_id +
                      "' past a batch that violates its program");
  }
  DqProgram next = program;
  const ColumnProfile batch_profile = Profile(accepted);
  std::optional<ColumnProfile> baseline_profile;
  for (auto& [metric, tail] : next.transform_context) {
    if (tail.empty()) continue;
    if (MetricArity(metric) == Arity::kTwo && !baseline_profile) {
      baseline_profile = Profile(baseline);
    }
    const RawValue raw =
        ComputeRaw(metric, batch_profile, baseline_profile ? &*baseline_profile : nullptr);
    if (!raw.value) {
      throw DqError(ErrorCode::kNoData, std::string(MetricName(metric)) +
                                            " has no value on the accepted batch");
    }
    tail.erase(tail.begin());
    tail.push_back(*raw.value);
  }
  return next;
}

std::string RenderReport(const ValidationReport& report) {
  std::ostringstream os;
  os << "column " << report.column_id << ": "
     << (report.verdict == Verdict::kPass ? "PASS" : "VIOLATION") << " ("
     << report.records.size() << " constraints, fpr_total " << FormatNumber(report.fpr_total)
     << ", delta " << FormatNumber(report.delta) << ")\n";
  for (const auto& r : report.records) {
    os << (r.satisfied ? "  ok    " : "  FAIL  ") << r.metric << " [" << r.transform
       << "] = " << (r.observed ? FormatNumber(*r.observed) : "n/a") << ", bounds "
       << (r.theta_l ? FormatNumber(*r.theta_l) : "-inf") << " .. "
       << FormatNumber(r.theta_u) << ", fpr <= " << FormatNumber(r.fpr_bound);
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace dqprog
