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

#ifndef DQPROG_SYNTHESIS_H_
#define DQPROG_SYNTHESIS_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dqprog/column.h"
#include "dqprog/constraints.h"
#include "dqprog/kernels.h"
#include "dqprog/program.h"

namespace dqprog {

enum class IssueType {
  kSchemaChange,
  kUnitChange,
  kCasingChange,
  kIncreasedNulls,
  kVolumeChange,
  kDistributionChange,
  kCharPerturbation,
  kCharInsertion,
  kCharDeletion,
  kWhitespacePadding,
};

inline constexpr std::size_t kIssueTypeCount = 10;

std::string_view IssueTypeName(IssueType type);
bool IssueAppliesTo(IssueType type, Dtype dtype);

// Parameter values swept per issue type: percentages for most types, the
// multiplier for UnitChange and the volume factor for VolumeChange.
std::span<const double> IssueParameters(IssueType type);

// Which end of the sorted column a DistributionChange keeps.
enum class SliceSide { kLow, kHigh };

struct DqIssueSpec {
  IssueType type = IssueType::kIncreasedNulls;
  double parameter = 0.0;
  std::uint64_t seed = 0;
  SliceSide side = SliceSide::kLow;

  bool operator==(const DqIssueSpec&) const = default;
};

// "100", "10/high", ...
std::string DescribeParameter(const DqIssueSpec& spec);

// Applies one issue to a copy of `base`. All randomness comes from
// spec.seed. Throws kInapplicableIssue for a (type, dtype) mismatch and
// kMissingDonor when SchemaChange lacks a same-typed donor.
ColumnSnapshot Inject(const ColumnSnapshot& base, const DqIssueSpec& spec,
                      const ColumnSnapshot* donor = nullptr);

struct Variant {
  DqIssueSpec spec;
  ColumnSnapshot column;
};

struct VariantCorpus {
  std::vector<Variant> variants;
  std::uint64_t base_index = 0;
  std::vector<std::string> warnings;
};

inline constexpr int kSeedsPerParameter = 2;

struct CorpusPlan {
  std::vector<DqIssueSpec> specs;
  std::vector<std::string> warnings;
};

// One spec per applicable (type, parameter[, side]) and seed, in a fixed
// order. SchemaChange is skipped with a warning when `donor` is unusable.
CorpusPlan PlanCorpus(const ColumnSnapshot& base, const ColumnSnapshot* donor,
                      std::uint64_t master_seed);

// Injects every planned spec into `base`.
VariantCorpus BuildCorpus(const ColumnSnapshot& base, const ColumnSnapshot* donor,
                          std::uint64_t master_seed);

// Transformed metric value of every variant for every scored metric; an
// empty optional means the metric could not be evaluated (no data, or a
// non-positive value under a log transform) and counts as caught.
struct VariantScores {
  std::map<MetricId, std::vector<std::optional<double>>> values;
};

// Scores variants as if each arrived right after `baseline`, whose own
// metric values close out `tails`.
VariantScores ScoreVariants(std::span<const ColumnProfile> variants,
                            const ColumnProfile& baseline,
                            const std::map<MetricId, TransformSpec>& transforms,
                            const TransformContext& tails);

// Indices of variants that violate q.
std::vector<std::size_t> RecallSet(const DqConstraint& q, const VariantScores& scores);
std::vector<std::size_t> RecallSet(const DqConstraint& q, const VariantCorpus& corpus,
                                   const TransformContext& tails,
                                   const ColumnSnapshot& baseline);

struct GreedySelection {
  std::vector<std::size_t> selected;
  double fpr_total = 0.0;
  std::size_t covered = 0;
  bool used_singleton = false;
};

inline constexpr std::size_t kNoClauseLimit = std::numeric_limits<std::size_t>::max();

// Budgeted maximum coverage: greedy on marginal-recall / cost, then the best
// affordable singleton if it covers more.
GreedySelection SelectGreedy(std::span<const double> costs,
                             std::span<const std::vector<std::size_t>> recall_sets,
                             double delta, std::size_t max_clauses = kNoClauseLimit);

DqProgram GreedySelect(std::span<const DqConstraint> candidates,
                       std::span<const std::vector<std::size_t>> recall_sets,
                       double delta, std::size_t max_clauses = kNoClauseLimit);

}  // namespace dqprog

#endif  // DQPROG_SYNTHESIS_H_
