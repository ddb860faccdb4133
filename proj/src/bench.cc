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

#include "dqprog/bench.h"

#include <exception>
#include <map>

#include <json.hpp>

#include "dqprog/error.h"
#include "dqprog/synthesis.h"

namespace dqprog {
namespace {

std::uint64_t Mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t x = seed;
  for (std::uint64_t v : {a, b, c}) {
    x ^= v + 0x9E3779B97F4A7C15ULL + (x << 6) + (x >> 2);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    x ^= x >> 31;
  }
  return x;
}

std::optional<double> Ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

nlohmann::ordered_json CountsJson(const Counts& c) {
  auto opt = [](std::optional<double> v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  return {{"tp", c.tp},
          {"fp", c.fp},
          {"fn", c.fn},
          {"tn", c.tn},
          {"precision", opt(c.precision())},
          {"recall", opt(c.recall())},
          {"fpr", opt(c.fpr())}};
}

std::vector<BenchRow> BenchColumn(std::span<const std::vector<ColumnSnapshot>> histories,
                                  std::size_t column, const std::vector<ColumnSnapshot>* donor,
                                  const BenchOptions& options,
                                  std::vector<std::string>& warnings) {
  const auto& history = histories[column];
  const std::size_t w = options.window;
  std::vector<BenchRow> rows;
  for (std::size_t start = 0; start + w < history.size(); ++start) {
    const ColumnSnapshot& next = history[start + w];
    const ColumnSnapshot& baseline = history[start + w - 1];
    const ColumnSnapshot* donor_last =
        donor && donor->size() > start + w ? &(*donor)[start + w - 1] : nullptr;
    const ColumnSnapshot* donor_next =
        donor && donor->size() > start + w ? &(*donor)[start + w] : nullptr;

    FitOptions fit = options.fit;
    fit.donor = donor_last;
    fit.master_seed = Mix(options.seed, column, start, 0);
    FitResult fitted = FitDetailed(std::span(history).subspan(start, w), options.delta, fit);
    if (start == 0) {
      for (auto& m : fitted.warnings) warnings.push_back(std::move(m));
    }
    const DqProgram& program = fitted.program;

    BenchRow clean{next.column_id, "precision", start, "none", "", false, false};
    clean.predicted = Check(program, next, baseline).verdict == Verdict::kViolation;
    rows.push_back(clean);

    const CorpusPlan plan = PlanCorpus(next, donor_next, Mix(options.seed, column, start, 1));
    for (const DqIssueSpec& spec : plan.specs) {
      const ColumnSnapshot variant = Inject(next, spec, donor_next);
      BenchRow row{next.column_id, "recall", start, std::string(IssueTypeName(spec.type)),
                   DescribeParameter(spec), false, true};
      row.predicted = Check(program, variant, baseline).verdict == Verdict::kViolation;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

void Counts::Add(const BenchRow& row) {
  if (row.truth) {
    row.predicted ? ++tp : ++fn;
  } else {
    row.predicted ? ++fp : ++tn;
  }
}

std::optional<double> Counts::precision() const { return Ratio(tp, tp + fp); }
std::optional<double> Counts::recall() const { return Ratio(tp, tp + fn); }
std::optional<double> Counts::fpr() const { return Ratio(fp, fp + tn); }

void Summarize(BenchResult& result) {
  result.aggregate = {};
  result.per_column.clear();
  result.per_issue_type.clear();
  std::map<std::string, Counts> issues;
  for (const auto& row : result.rows) {
    result.aggregate.Add(row);
    if (result.per_column.empty() || result.per_column.back().first != row.column_id) {
      result.per_column.emplace_back(row.column_id, Counts{});
    }
    result.per_column.back().second.Add(row);
    if (row.truth) issues[row.issue_type].Add(row);
  }
  result.per_issue_type.assign(issues.begin(), issues.end());
}

BenchResult RunBench(std::span<const std::vector<ColumnSnapshot>> histories,
                     const BenchOptions& options) {
  if (options.window < kMinHistoryLength) {
    throw DqError(ErrorCode::kInvalidArgument,
                  "window must be at least " + std::to_string(kMinHistoryLength));
  }
  const std::size_t n = histories.size();
  for (const auto& h : histories) {
    if (h.size() < options.window + 1) {
      const std::string id = h.empty() ? std::string("?") : h.front().column_id;
      throw DqError(ErrorCode::kTooShort,
                    "column '" + id + "' has " + std::to_string(h.size()) +
                        " snapshots; window " + std::to_string(options.window) +
                        " requires at least " + std::to_string(options.window + 1));
    }
  }
  std::vector<const std::vector<ColumnSnapshot>*> donors(n, nullptr);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 1; k < n; ++k) {
      const auto& other = histories[(i + k) % n];
      if (other.front().dtype() == histories[i].front().dtype()) {
        donors[i] = &other;
        break;
      }
    }
  }

  std::vector<std::vector<BenchRow>> rows(n);
  std::vector<std::vector<std::string>> warnings(n);
  std::vector<std::exception_ptr> errors(n);
  const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      rows[i] = BenchColumn(histories, i, donors[i], options, warnings[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  BenchResult result;
  result.window = options.window;
  result.delta = options.delta;
  result.seed = options.seed;
  for (std::size_t i = 0; i < n; ++i) {
    result.rows.insert(result.rows.end(), rows[i].begin(), rows[i].end());
    result.warnings.insert(result.warnings.end(), warnings[i].begin(), warnings[i].end());
  }
  Summarize(result);
  return result;
}

BenchResult RunBench(const SnapshotStore& store, const BenchOptions& options) {
  std::vector<std::vector<ColumnSnapshot>> histories;
  for (const auto& [name, dtype] : store.schema.columns) {
    histories.push_back(store.history(name));
  }
  return RunBench(histories, options);
}

std::string BenchCsv(const BenchResult& result) {
  std::string out = "column_id,test_kind,window_start,issue_type,parameter,predicted,truth\n";
  for (const auto& r : result.rows) {
    out += FormatCsvField(r.column_id) + "," + r.test_kind + "," +
           std::to_string(r.window_start) + "," + r.issue_type + "," + r.parameter + "," +
           (r.predicted ? "1" : "0") + "," + (r.truth ? "1" : "0") + "\n";
  }
  return out;
}

std::string BenchJson(const BenchResult& result) {
  nlohmann::ordered_json j;
  j["window"] = result.window;
  j["delta"] = result.delta;
  j["seed"] = result.seed;
  j["tests"] = result.rows.size();
  j["aggregate"] = CountsJson(result.aggregate);
  j["issue_types"] = nlohmann::ordered_json::array();
  for (const auto& [type, c] : result.per_issue_type) {
    auto e = CountsJson(c);
    e["issue_type"] = type;
    j["issue_types"].push_back(e);
  }
  j["columns"] = nlohmann::ordered_json::array();
  for (const auto& [column, c] : result.per_column) {
    auto e = CountsJson(c);
    e["column_id"] = column;
    j["columns"].push_back(e);
  }
  j["warnings"] = result.warnings;
  return j.dump(2) + "\n";
}

}  // namespace dqprog
