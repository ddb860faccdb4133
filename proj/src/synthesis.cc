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

#include "dqprog/synthesis.h"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <system_error>

#include "dqprog/error.h"
#include "dqprog/metrics.h"

namespace dqprog {
namespace {

constexpr std::array<double, 3> kSchemaParams = {1, 10, 100};
constexpr std::array<double, 3> kUnitParams = {10, 100, 1000};
constexpr std::array<double, 3> kCasingParams = {1, 10, 100};
constexpr std::array<double, 3> kNullParams = {1, 50, 100};
constexpr std::array<double, 4> kVolumeParams = {2, 10, 0.5, 0.1};
constexpr std::array<double, 2> kDistributionParams = {10, 50};
constexpr std::array<double, 3> kPerturbParams = {1, 10, 100};
constexpr std::array<double, 2> kInsertParams = {10, 50};
constexpr std::array<double, 2> kDeleteParams = {10, 50};
constexpr std::array<double, 3> kPaddingParams = {10, 50, 100};

constexpr std::array<IssueType, kIssueTypeCount> kAllIssues = {
    IssueType::kSchemaChange,       IssueType::kUnitChange,
    IssueType::kCasingChange,       IssueType::kIncreasedNulls,
    IssueType::kVolumeChange,       IssueType::kDistributionChange,
    IssueType::kCharPerturbation,   IssueType::kCharInsertion,
    IssueType::kCharDeletion,       IssueType::kWhitespacePadding,
};

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

using Rng = std::mt19937_64;

bool Coin(Rng& rng, double percent) {
  return std::uniform_real_distribution<double>(0.0, 100.0)(rng) < percent;
}

std::size_t Pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// ceil(p% of n), so any positive p touches at least one cell.
std::size_t PercentCount(double percent, std::size_t n) {
  if (percent >= 100.0) return n;
  return std::min(n, static_cast<std::size_t>(std::ceil(percent / 100.0 * n)));
}

template <typename Cells>
std::vector<std::size_t> NonNullIndices(const Cells& cells) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!IsNull(cells[i])) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> SampleIndices(const std::vector<std::size_t>& pool,
                                       std::size_t count, Rng& rng) {
  std::vector<std::size_t> out;
  out.reserve(count);
  std::sample(pool.begin(), pool.end(), std::back_inserter(out), count, rng);
  return out;
}

std::vector<std::size_t> AllIndices(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

std::vector<std::string> SplitCodePoints(const std::string& s) {
  std::vector<std::string> out;
  for (unsigned char c : s) {
    if ((c & 0xC0) == 0x80 && !out.empty()) {
      out.back() += static_cast<char>(c);
    } else {
      out.emplace_back(1, static_cast<char>(c));
    }
  }
  return out;
}

std::string Join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

char RandomFromRange(Rng& rng, char lo, char hi, char avoid) {
  const int span = hi - lo;  // one fewer than the range size: skip `avoid`
  int v = std::uniform_int_distribution<int>(0, span - 1)(rng);
  char c = static_cast<char>(lo + v);
  if (c >= avoid) ++c;
  return c;
}

// A different character of the same class; other characters are kept.
std::string PerturbChar(const std::string& cp, Rng& rng) {
  if (cp.size() != 1) return cp;
  const char c = cp[0];
  if (c >= '0' && c <= '9') return std::string(1, RandomFromRange(rng, '0', '9', c));
  if (c >= 'a' && c <= 'z') return std::string(1, RandomFromRange(rng, 'a', 'z', c));
  if (c >= 'A' && c <= 'Z') return std::string(1, RandomFromRange(rng, 'A', 'Z', c));
  return cp;
}

char RandomAlnum(Rng& rng) {
  static constexpr std::string_view kAlphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  return kAlphabet[Pick(rng, kAlphabet.size())];
}

std::string ToDecimal(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::optional<double> FromDecimal(const std::string& s) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

// Character-level edits applied through the decimal form for numeric cells.
template <typename Edit>
ColumnSnapshot EditText(const ColumnSnapshot& base, Edit edit) {
  ColumnSnapshot out = base;
  if (out.dtype() == Dtype::kCategorical) {
    for (auto& cell : out.text()) {
      if (!IsNull(cell)) cell = edit(*cell);
    }
  } else {
    for (auto& cell : out.numeric()) {
      if (IsNull(cell)) continue;
      cell = FromDecimal(edit(ToDecimal(*cell)));
    }
  }
  return out;
}

template <typename Cells>
Cells Resample(const Cells& pool, std::size_t count, Rng& rng) {
  Cells out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(pool[Pick(rng, pool.size())]);
  return out;
}

template <typename Cells>
Cells ChangeVolume(const Cells& cells, double factor, Rng& rng) {
  const std::size_t n = cells.size();
  const auto target = static_cast<std::size_t>(std::llround(factor * static_cast<double>(n)));
  if (n == 0) return cells;
  if (target <= n) {
    Cells out;
    out.reserve(target);
    std::sample(cells.begin(), cells.end(), std::back_inserter(out), target, rng);
    return out;
  }
  return Resample(cells, target, rng);
}

template <typename Cells>
Cells BiasDistribution(const Cells& cells, double percent, SliceSide side, Rng& rng) {
  Cells sorted;
  for (const auto& c : cells) {
    if (!IsNull(c)) sorted.push_back(c);
  }
  if (sorted.empty()) return cells;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t keep = std::max<std::size_t>(1, PercentCount(percent, sorted.size()));
  Cells slice = side == SliceSide::kLow
                    ? Cells(sorted.begin(), sorted.begin() + keep)
                    : Cells(sorted.end() - keep, sorted.end());
  return Resample(slice, cells.size(), rng);
}

std::string SwapCase(std::string s) {
  for (char& c : s) {
    if (c >= 'a' && c <= 'z') {
      c = static_cast<char>(c - 'a' + 'A');
    } else if (c >= 'A' && c <= 'Z') {
      c = static_cast<char>(c - 'A' + 'a');
    }
  }
  return s;
}

bool UsableDonor(const ColumnSnapshot& base, const ColumnSnapshot* donor) {
  return donor != nullptr && donor->dtype() == base.dtype() && donor->rows() > 0;
}

}  // namespace

std::string_view IssueTypeName(IssueType type) {
  switch (type) {
    case IssueType::kSchemaChange: return "SchemaChange";
    case IssueType::kUnitChange: return "UnitChange";
    case IssueType::kCasingChange: return "CasingChange";
    case IssueType::kIncreasedNulls: return "IncreasedNulls";
    case IssueType::kVolumeChange: return "VolumeChange";
    case IssueType::kDistributionChange: return "DistributionChange";
    case IssueType::kCharPerturbation: return "CharPerturbation";
    case IssueType::kCharInsertion: return "CharInsertion";
    case IssueType::kCharDeletion: return "CharDeletion";
    case IssueType::kWhitespacePadding: return "WhitespacePadding";
  }
  return "";
}

bool IssueAppliesTo(IssueType type, Dtype dtype) {
  switch (type) {
    case IssueType::kUnitChange:
      return dtype == Dtype::kNumeric;
    case IssueType::kCasingChange:
    case IssueType::kCharInsertion:
    case IssueType::kWhitespacePadding:
      return dtype == Dtype::kCategorical;
    default:
      return true;
  }
}

std::span<const double> IssueParameters(IssueType type) {
  switch (type) {
    case IssueType::kSchemaChange: return kSchemaParams;
    case IssueType::kUnitChange: return kUnitParams;
    case IssueType::kCasingChange: return kCasingParams;
    case IssueType::kIncreasedNulls: return kNullParams;
    case IssueType::kVolumeChange: return kVolumeParams;
    case IssueType::kDistributionChange: return kDistributionParams;
    case IssueType::kCharPerturbation: return kPerturbParams;
    case IssueType::kCharInsertion: return kInsertParams;
    case IssueType::kCharDeletion: return kDeleteParams;
    case IssueType::kWhitespacePadding: return kPaddingParams;
  }
  return {};
}

std::string DescribeParameter(const DqIssueSpec& spec) {
  std::string p = ToDecimal(spec.parameter);
  if (spec.type == IssueType::kDistributionChange) {
    p += spec.side == SliceSide::kLow ? "/low" : "/high";
  }
  return p;
}

ColumnSnapshot Inject(const ColumnSnapshot& base, const DqIssueSpec& spec,
                      const ColumnSnapshot* donor) {
  const Dtype dtype = base.dtype();
  if (!IssueAppliesTo(spec.type, dtype)) {
    throw DqError(ErrorCode::kInapplicableIssue,
                  std::string(IssueTypeName(spec.type)) + " on " +
                      std::string(DtypeName(dtype)) + " column");
  }
  Rng rng(spec.seed);
  const double p = spec.parameter;
  ColumnSnapshot out = base;

  switch (spec.type) {
    case IssueType::kSchemaChange: {
      if (!UsableDonor(base, donor)) {
        throw DqError(ErrorCode::kMissingDonor,
                      "schema change needs a non-empty donor column of the same dtype");
      }
      const auto targets =
          SampleIndices(AllIndices(base.rows()), PercentCount(p, base.rows()), rng);
      std::visit(
          [&](auto& cells) {
            using Cells = std::decay_t<decltype(cells)>;
            const Cells& from = std::get<Cells>(donor->cells);
            for (std::size_t i : targets) cells[i] = from[Pick(rng, from.size())];
          },
          out.cells);
      return out;
    }
    case IssueType::kUnitChange:
      for (auto& cell : out.numeric()) {
        if (!IsNull(cell)) *cell *= p;
      }
      return out;
    case IssueType::kCasingChange: {
      auto& cells = out.text();
      for (std::size_t i : SampleIndices(NonNullIndices(cells),
                                         PercentCount(p, NonNullIndices(cells).size()), rng)) {
        cells[i] = SwapCase(*cells[i]);
      }
      return out;
    }
    case IssueType::kIncreasedNulls:
      std::visit(
          [&](auto& cells) {
            const auto pool = NonNullIndices(cells);
            for (std::size_t i : SampleIndices(pool, PercentCount(p, pool.size()), rng)) {
              if constexpr (std::is_same_v<std::decay_t<decltype(cells)>, NumericCells>) {
                cells[i] = 0.0;
              } else {
                cells[i] = std::string();
              }
            }
          },
          out.cells);
      return out;
    case IssueType::kVolumeChange:
      std::visit([&](auto& cells) { cells = ChangeVolume(cells, p, rng); }, out.cells);
      return out;
    case IssueType::kDistributionChange:
      std::visit([&](auto& cells) { cells = BiasDistribution(cells, p, spec.side, rng); },
                 out.cells);
      return out;
    case IssueType::kCharPerturbation:
      return EditText(base, [&](const std::string& s) {
        auto cps = SplitCodePoints(s);
        for (auto& cp : cps) {
          if (Coin(rng, p)) cp = PerturbChar(cp, rng);
        }
        return Join(cps);
      });
    case IssueType::kCharInsertion:
      return EditText(base, [&](const std::string& s) {
        if (!Coin(rng, p)) return s;
        auto cps = SplitCodePoints(s);
        const std::size_t at = Pick(rng, cps.size() + 1);
        cps.insert(cps.begin() + static_cast<std::ptrdiff_t>(at), std::string(1, RandomAlnum(rng)));
        return Join(cps);
      });
    case IssueType::kCharDeletion:
      return EditText(base, [&](const std::string& s) {
        std::string kept;
        for (const auto& cp : SplitCodePoints(s)) {
          if (!Coin(rng, p)) kept += cp;
        }
        return kept;
      });
    case IssueType::kWhitespacePadding: {
      auto& cells = out.text();
      const auto pool = NonNullIndices(cells);
      for (std::size_t i : SampleIndices(pool, PercentCount(p, pool.size()), rng)) {
        *cells[i] = Coin(rng, 50.0) ? " " + *cells[i] : *cells[i] + " ";
      }
      return out;
    }
  }
  return out;
}

CorpusPlan PlanCorpus(const ColumnSnapshot& base, const ColumnSnapshot* donor,
                      std::uint64_t master_seed) {
  CorpusPlan plan;
  const Dtype dtype = base.dtype();
  for (IssueType type : kAllIssues) {
    if (!IssueAppliesTo(type, dtype)) continue;
    if (type == IssueType::kSchemaChange && !UsableDonor(base, donor)) {
      plan.warnings.push_back("SchemaChange skipped for column '" + base.column_id +
                              "': no donor column of the same dtype");
      continue;
    }
    const auto params = IssueParameters(type);
    const int sides = type == IssueType::kDistributionChange ? 2 : 1;
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
      for (int side = 0; side < sides; ++side) {
        for (int rep = 0; rep < kSeedsPerParameter; ++rep) {
          const std::uint64_t key = (static_cast<std::uint64_t>(type) << 16) |
                                    (pi << 8) | (static_cast<std::uint64_t>(side) << 4) |
                                    static_cast<std::uint64_t>(rep);
          DqIssueSpec spec;
          spec.type = type;
          spec.parameter = params[pi];
          spec.side = side == 0 ? SliceSide::kLow : SliceSide::kHigh;
          spec.seed = SplitMix64(master_seed ^ SplitMix64(key));
          plan.specs.push_back(spec);
        }
      }
    }
  }
  return plan;
}

VariantCorpus BuildCorpus(const ColumnSnapshot& base, const ColumnSnapshot* donor,
                          std::uint64_t master_seed) {
  CorpusPlan plan = PlanCorpus(base, donor, master_seed);
  VariantCorpus corpus;
  corpus.base_index = base.execution_index;
  corpus.warnings = std::move(plan.warnings);
  corpus.variants.resize(plan.specs.size());
  const std::int64_t n = static_cast<std::int64_t>(plan.specs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    corpus.variants[i] = {plan.specs[i], Inject(base, plan.specs[i], donor)};
  }
  return corpus;
}

VariantScores ScoreVariants(std::span<const ColumnProfile> variants,
                            const ColumnProfile& baseline,
                            const std::map<MetricId, TransformSpec>& transforms,
                            const TransformContext& tails) {
  VariantScores scores;
  std::vector<MetricId> metrics;
  std::vector<const std::vector<double>*> tail_of;
  static const std::vector<double> kEmpty;
  for (const auto& [metric, spec] : transforms) {
    scores.values[metric].assign(variants.size(), std::nullopt);
    metrics.push_back(metric);
    auto it = tails.find(metric);
    tail_of.push_back(it == tails.end() ? &kEmpty : &it->second);
  }
  const std::int64_t n = static_cast<std::int64_t>(variants.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t v = 0; v < n; ++v) {
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      const MetricId metric = metrics[m];
      try {
        const double raw = MetricArity(metric) == Arity::kSingle
                               ? ComputeSingle(variants[v], metric)
                               : ComputeTwo(variants[v], baseline, metric);
        scores.values.at(metric)[v] =
            TransformNewPoint(transforms.at(metric), *tail_of[m], raw);
      } catch (const DqError&) {
        // Left empty: counts as caught.
      }
    }
  }
  return scores;
}

std::vector<std::size_t> RecallSet(const DqConstraint& q, const VariantScores& scores) {
  std::vector<std::size_t> out;
  auto it = scores.values.find(q.metric);
  if (it == scores.values.end()) {
    throw DqError(ErrorCode::kInvalidArgument,
                  std::string(MetricName(q.metric)) + " was not scored");
  }
  const auto& values = it->second;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (!values[v] || !EvaluateConstraint(q, *values[v])) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> RecallSet(const DqConstraint& q, const VariantCorpus& corpus,
                                   const TransformContext& tails,
                                   const ColumnSnapshot& baseline) {
  std::vector<ColumnProfile> profiles(corpus.variants.size());
  const std::int64_t n = static_cast<std::int64_t>(profiles.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t v = 0; v < n; ++v) profiles[v] = Profile(corpus.variants[v].column);
  const VariantScores scores =
      ScoreVariants(profiles, Profile(baseline), {{q.metric, q.transform}}, tails);
  return RecallSet(q, scores);
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits ToBits(const std::vector<std::size_t>& set, std::size_t words) {
  Bits b(words, 0);
  for (std::size_t i : set) b[i / 64] |= std::uint64_t{1} << (i % 64);
  return b;
}

std::size_t Gain(const Bits& set, const Bits& covered) {
  std::size_t g = 0;
  for (std::size_t w = 0; w < set.size(); ++w) g += std::popcount(set[w] & ~covered[w]);
  return g;
}

}  // namespace

GreedySelection SelectGreedy(std::span<const double> costs,
                             std::span<const std::vector<std::size_t>> recall_sets,
                             double delta, std::size_t max_clauses) {
  if (costs.size() != recall_sets.size()) {
    throw DqError(ErrorCode::kInvalidArgument, "costs and recall sets differ in length");
  }
  if (!(delta > 0.0)) throw DqError(ErrorCode::kInvalidArgument, "delta must be positive");
  const std::size_t n = costs.size();
  std::size_t universe = 0;
  for (const auto& s : recall_sets) {
    for (std::size_t i : s) universe = std::max(universe, i + 1);
  }
  const std::size_t words = (universe + 63) / 64;
  std::vector<Bits> sets;
  sets.reserve(n);
  for (const auto& s : recall_sets) sets.push_back(ToBits(s, words));

  GreedySelection result;
  Bits covered(words, 0);
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  while (remaining > 0 && result.selected.size() < max_clauses) {
    std::size_t best = n;
    double best_ratio = 0.0;
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      const std::size_t gain = Gain(sets[i], covered);
      const double ratio = gain == 0 ? 0.0
                           : costs[i] > 0.0
                               ? static_cast<double>(gain) / costs[i]
                               : std::numeric_limits<double>::infinity();
      const bool better = best == n || ratio > best_ratio ||
                          (ratio == best_ratio && costs[i] < costs[best]);
      if (better) {
        best = i;
        best_ratio = ratio;
        best_gain = gain;
      }
    }
    if (best_gain == 0) break;
    alive[best] = false;
    --remaining;
    if (result.fpr_total + costs[best] <= delta) {
      result.selected.push_back(best);
      result.fpr_total += costs[best];
      for (std::size_t w = 0; w < words; ++w) covered[w] |= sets[best][w];
      result.covered += best_gain;
    }
  }

  std::size_t single = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(costs[i] <= delta)) continue;
    const std::size_t size = recall_sets[i].size();
    if (single == n || size > recall_sets[single].size() ||
        (size == recall_sets[single].size() && costs[i] < costs[single])) {
      single = i;
    }
  }
  if (single != n && recall_sets[single].size() > result.covered) {
    result.selected = {single};
    result.fpr_total = costs[single];
    result.covered = Gain(sets[single], Bits(words, 0));
    result.used_singleton = true;
  }
  return result;
}

DqProgram GreedySelect(std::span<const DqConstraint> candidates,
                       std::span<const std::vector<std::size_t>> recall_sets,
                       double delta, std::size_t max_clauses) {
  std::vector<double> costs;
  costs.reserve(candidates.size());
  for (const auto& q : candidates) costs.push_back(q.fpr_bound);
  const GreedySelection sel = SelectGreedy(costs, recall_sets, delta, max_clauses);
  DqProgram program;
  program.delta = delta;
  program.fpr_total = sel.fpr_total;
  program.recall_covered = sel.covered;
  for (std::size_t i : sel.selected) program.constraints.push_back(candidates[i]);
  return program;
}

}  // namespace dqprog
