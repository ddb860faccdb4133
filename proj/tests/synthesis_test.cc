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
#include <cmath>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dqprog/error.h"
#include "dqprog/metrics.h"
#include "dqprog/runner.h"
#include "dqprog/synthetic_data.h"

namespace dqprog {
namespace {

ColumnSnapshot Words(std::size_t n, std::uint64_t seed) {
  return GenerateCategoricalHistory("s", 1, n, seed).front();
}

ColumnSnapshot Numbers(std::size_t n, std::uint64_t seed) {
  return GenerateNumericHistory("x", 1, n, seed).front();
}

DqIssueSpec Spec(IssueType type, double parameter, std::uint64_t seed = 1) {
  DqIssueSpec s;
  s.type = type;
  s.parameter = parameter;
  s.seed = seed;
  return s;
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const DqError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no DqError thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(InjectTest, Examples) {
  auto ab = ColumnSnapshot::Text("s", {"a", "b"});
  EXPECT_EQ(Inject(ab, Spec(IssueType::kIncreasedNulls, 100)).text(),
            (TextCells{"", ""}));
  auto nums = ColumnSnapshot::Numeric("x", {1.5, 2.0});
  EXPECT_EQ(Inject(nums, Spec(IssueType::kUnitChange, 1000)).numeric(),
            (NumericCells{1500.0, 2000.0}));
  auto hundred = ColumnSnapshot::Numeric("x", NumericCells(100, 1.0));
  EXPECT_EQ(Inject(hundred, Spec(IssueType::kVolumeChange, 0.5)).rows(), 50u);
}

TEST(InjectTest, Applicability) {
  auto nums = Numbers(20, 1);
  auto words = Words(20, 1);
  EXPECT_EQ(CodeOf([&] { Inject(words, Spec(IssueType::kUnitChange, 10)); }),
            ErrorCode::kInapplicableIssue);
  for (IssueType t : {IssueType::kCasingChange, IssueType::kCharInsertion,
                      IssueType::kWhitespacePadding}) {
    EXPECT_EQ(CodeOf([&] { Inject(nums, Spec(t, 10)); }), ErrorCode::kInapplicableIssue);
  }
  EXPECT_EQ(CodeOf([&] { Inject(nums, Spec(IssueType::kSchemaChange, 10)); }),
            ErrorCode::kMissingDonor);
  EXPECT_EQ(CodeOf([&] { Inject(nums, Spec(IssueType::kSchemaChange, 10), &words); }),
            ErrorCode::kMissingDonor);
}

TEST(InjectTest, SchemaChangeUsesDonorCells) {
  auto base = ColumnSnapshot::Text("s", TextCells(50, "base"));
  auto donor = ColumnSnapshot::Text("d", {"d1", "d2"});
  auto all = Inject(base, Spec(IssueType::kSchemaChange, 100), &donor);
  for (const auto& c : all.text()) EXPECT_TRUE(*c == "d1" || *c == "d2");
  auto some = Inject(base, Spec(IssueType::kSchemaChange, 10), &donor);
  EXPECT_EQ(std::count(some.text().begin(), some.text().end(), std::optional<std::string>("base")),
            45);
}

TEST(InjectTest, CasingAndPadding) {
  auto base = ColumnSnapshot::Text("s", TextCells(20, "Ab1"));
  auto flipped = Inject(base, Spec(IssueType::kCasingChange, 100));
  for (const auto& c : flipped.text()) EXPECT_EQ(*c, "aB1");
  auto padded = Inject(base, Spec(IssueType::kWhitespacePadding, 50));
  int changed = 0;
  for (const auto& c : padded.text()) {
    if (*c != "Ab1") {
      ++changed;
      EXPECT_TRUE(*c == " Ab1" || *c == "Ab1 ");
    }
  }
  EXPECT_EQ(changed, 10);
}

TEST(InjectTest, CharacterEdits) {
  auto base = ColumnSnapshot::Text("s", TextCells(200, "abc123"));
  const ColumnSnapshot perturbed = Inject(base, Spec(IssueType::kCharPerturbation, 100));
  for (const auto& c : perturbed.text()) {
    ASSERT_EQ(c->size(), 6u);
    EXPECT_EQ(GeneratePattern(*c), GeneratePattern("abc123"));
    for (std::size_t i = 0; i < 6; ++i) EXPECT_NE((*c)[i], "abc123"[i]);
  }
  std::size_t longer = 0;
  const ColumnSnapshot inserted = Inject(base, Spec(IssueType::kCharInsertion, 50));
  for (const auto& c : inserted.text()) {
    EXPECT_TRUE(c->size() == 6 || c->size() == 7);
    longer += c->size() == 7;
  }
  EXPECT_GT(longer, 60u);
  EXPECT_LT(longer, 140u);
  const ColumnSnapshot deleted = Inject(base, Spec(IssueType::kCharDeletion, 100));
  for (const auto& c : deleted.text()) {
    EXPECT_TRUE(IsNull(c));
  }
}

TEST(InjectTest, NumericCharacterEditsGoThroughDecimalForm) {
  auto base = ColumnSnapshot::Numeric("x", NumericCells(50, 12.5));
  const ColumnSnapshot perturbed = Inject(base, Spec(IssueType::kCharPerturbation, 100));
  for (const auto& c : perturbed.numeric()) {
    ASSERT_TRUE(c.has_value());
    EXPECT_NE(*c, 12.5);
  }
  // Deleting every character leaves nothing to parse.
  const ColumnSnapshot deleted = Inject(base, Spec(IssueType::kCharDeletion, 100));
  for (const auto& c : deleted.numeric()) {
    EXPECT_TRUE(IsNull(c));
  }
}

TEST(InjectTest, DistributionChangeKeepsRowsAndSlice) {
  NumericCells cells;
  for (int i = 0; i < 100; ++i) cells.push_back(static_cast<double>(i));
  auto base = ColumnSnapshot::Numeric("x", cells);
  auto spec = Spec(IssueType::kDistributionChange, 10);
  auto low = Inject(base, spec);
  EXPECT_EQ(low.rows(), 100u);
  for (const auto& c : low.numeric()) EXPECT_LT(*c, 10.0);
  spec.side = SliceSide::kHigh;
  const ColumnSnapshot high = Inject(base, spec);
  for (const auto& c : high.numeric()) EXPECT_GE(*c, 90.0);
}

TEST(InjectTest, Deterministic) {
  auto base = Words(300, 9);
  for (IssueType t : {IssueType::kCharPerturbation, IssueType::kVolumeChange,
                      IssueType::kDistributionChange, IssueType::kIncreasedNulls}) {
    EXPECT_EQ(Inject(base, Spec(t, 50, 77)), Inject(base, Spec(t, 50, 77)));
  }
}

TEST(InjectTest, Invariants) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto words = Words(300, seed);
    const double before = ComputeSingle(words, MetricId::kCompleteRatio);
    for (double p : IssueParameters(IssueType::kIncreasedNulls)) {
      auto v = Inject(words, Spec(IssueType::kIncreasedNulls, p, seed));
      EXPECT_LT(ComputeSingle(v, MetricId::kCompleteRatio), before);
    }
    auto nums = Numbers(300, seed);
    const double mean = ComputeSingle(nums, MetricId::kMean);
    for (double f : IssueParameters(IssueType::kUnitChange)) {
      auto v = Inject(nums, Spec(IssueType::kUnitChange, f, seed));
      EXPECT_NEAR(ComputeSingle(v, MetricId::kMean), f * mean, 1e-12 * f * std::abs(mean));
    }
    for (double f : IssueParameters(IssueType::kVolumeChange)) {
      auto v = Inject(nums, Spec(IssueType::kVolumeChange, f, seed));
      EXPECT_EQ(ComputeSingle(v, MetricId::kRowCount), std::round(f * nums.rows()));
    }
  }
}

TEST(CorpusTest, Counts) {
  auto nums = Numbers(100, 1);
  auto nums2 = Numbers(100, 2);
  auto words = Words(100, 1);
  auto words2 = Words(100, 2);
  EXPECT_EQ(BuildCorpus(nums, &nums2, 5).variants.size(), 44u);
  const VariantCorpus no_donor = BuildCorpus(words, nullptr, 5);
  EXPECT_EQ(no_donor.variants.size(), 48u);
  EXPECT_EQ(no_donor.warnings.size(), 1u);
  EXPECT_EQ(BuildCorpus(words, &words2, 5).variants.size(), 54u);
  EXPECT_EQ(BuildCorpus(nums, nullptr, 5).variants.size(), 38u);
}

TEST(CorpusTest, DeterministicAndSeedSensitive) {
  auto words = Words(200, 1);
  auto donor = Words(200, 2);
  const auto a = BuildCorpus(words, &donor, 42);
  const auto b = BuildCorpus(words, &donor, 42);
  ASSERT_EQ(a.variants.size(), b.variants.size());
  std::set<std::uint64_t> seeds;
  for (std::size_t i = 0; i < a.variants.size(); ++i) {
    EXPECT_EQ(a.variants[i].spec, b.variants[i].spec);
    EXPECT_EQ(a.variants[i].column, b.variants[i].column);
    seeds.insert(a.variants[i].spec.seed);
  }
  EXPECT_EQ(seeds.size(), a.variants.size());
  EXPECT_NE(BuildCorpus(words, &donor, 43).variants[0].spec.seed, a.variants[0].spec.seed);
}

TEST(CorpusTest, EachVariantAppliesOneIssue) {
  auto nums = Numbers(100, 4);
  auto donor = Numbers(100, 5);
  for (const auto& v : BuildCorpus(nums, &donor, 1).variants) {
    EXPECT_EQ(v.column, Inject(nums, v.spec, &donor));
  }
}

TEST(RecallSetTest, Examples) {
  const auto history = GenerateCategoricalHistory("s", 30, 400, 12);
  std::vector<ColumnProfile> profiles;
  for (const auto& s : history) profiles.push_back(Profile(s));
  const ColumnSnapshot& base = history.back();
  const ColumnSnapshot& baseline = history[history.size() - 2];

  DqConstraint dvc;
  dvc.metric = MetricId::kDistValCount;
  dvc.transform = TransformSpec::Identity(30);
  dvc.theta_l = dvc.theta_u = dvc.mu = ComputeSingle(base, MetricId::kDistValCount);
  dvc.beta = kEqualityTolerance * dvc.mu;
  dvc.fpr_bound = kDegenerateFprBound;

  VariantCorpus corpus;
  corpus.variants.push_back({Spec(IssueType::kIncreasedNulls, 100),
                             Inject(base, Spec(IssueType::kIncreasedNulls, 100))});
  corpus.variants.push_back({{}, base});
  corpus.variants.push_back({Spec(IssueType::kVolumeChange, 10),
                             Inject(base, Spec(IssueType::kVolumeChange, 10))});
  EXPECT_EQ(RecallSet(dvc, corpus, {}, baseline), (std::vector<std::size_t>{0}));

  // row_count fitted on the history: ten times the volume is far outside.
  MetricSeries rows;
  rows.metric = MetricId::kRowCount;
  rows.raw = RawMetricSeries(profiles, MetricId::kRowCount);
  const StationaryFit fit = MakeStationary(rows.raw);
  rows.transform = fit.transform;
  rows.stationary = fit.stationary;
  TransformContext tails;
  tails[MetricId::kRowCount] = std::vector<double>(
      rows.raw.end() - 1 - rows.transform.tail_length(), rows.raw.end() - 1);
  for (const auto& q : ConstructConstraints(std::span(&rows, 1))) {
    const auto caught = RecallSet(q, corpus, tails, baseline);
    EXPECT_TRUE(std::count(caught.begin(), caught.end(), 2u)) << q.beta;
  }
}

TEST(GreedyTest, WorkedExample) {
  const std::vector<double> costs = {0.004, 0.002, 0.003};
  const std::vector<std::vector<std::size_t>> sets = {{1, 2, 3}, {3, 4}, {5}};
  const GreedySelection g = SelectGreedy(costs, sets, 0.006);
  EXPECT_EQ(g.selected, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(g.covered, 4u);
  EXPECT_FALSE(g.used_singleton);
}

TEST(GreedyTest, TrivialCases) {
  const std::vector<double> one = {0.001};
  const std::vector<std::vector<std::size_t>> set = {{0, 1}};
  EXPECT_EQ(SelectGreedy(one, set, 0.01).selected, (std::vector<std::size_t>{0}));
  EXPECT_TRUE(SelectGreedy(one, set, 0.0005).selected.empty());
  EXPECT_TRUE(SelectGreedy({}, {}, 0.1).selected.empty());
}

TEST(GreedyTest, SingletonFallback) {
  // Cheap small sets exhaust the budget before the large expensive one.
  const std::vector<double> costs = {0.001, 0.001, 0.01};
  const std::vector<std::vector<std::size_t>> sets = {{0}, {1}, {2, 3, 4, 5, 6}};
  const GreedySelection g = SelectGreedy(costs, sets, 0.01);
  EXPECT_TRUE(g.used_singleton);
  EXPECT_EQ(g.selected, (std::vector<std::size_t>{2}));
  EXPECT_EQ(g.covered, 5u);
}

TEST(GreedyTest, ClauseLimit) {
  const std::vector<double> costs = {0.001, 0.001, 0.001};
  const std::vector<std::vector<std::size_t>> sets = {{0}, {1}, {2}};
  EXPECT_EQ(SelectGreedy(costs, sets, 0.1, 1).selected.size(), 1u);
  EXPECT_EQ(SelectGreedy(costs, sets, 0.1).selected.size(), 3u);
}

struct Instance {
  std::vector<double> costs;
  std::vector<std::vector<std::size_t>> sets;
  double delta;
};

Instance RandomInstance(std::mt19937_64& rng) {
  Instance in;
  const int n = std::uniform_int_distribution<int>(1, 12)(rng);
  const int universe = std::uniform_int_distribution<int>(5, 40)(rng);
  std::uniform_real_distribution<double> cost(0.0001, 0.01);
  std::uniform_real_distribution<double> density(0.05, 0.5);
  for (int i = 0; i < n; ++i) {
    in.costs.push_back(cost(rng));
    const double d = density(rng);
    std::vector<std::size_t> s;
    for (int e = 0; e < universe; ++e) {
      if (std::uniform_real_distribution<double>(0, 1)(rng) < d) s.push_back(e);
    }
    in.sets.push_back(std::move(s));
  }
  in.delta = std::uniform_real_distribution<double>(0.002, 0.03)(rng);
  return in;
}

std::size_t BruteForceOptimum(const Instance& in) {
  std::size_t best = 0;
  const std::size_t n = in.costs.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double cost = 0.0;
    std::set<std::size_t> covered;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        cost += in.costs[i];
        covered.insert(in.sets[i].begin(), in.sets[i].end());
      }
    }
    if (cost <= in.delta) best = std::max(best, covered.size());
  }
  return best;
}

TEST(GreedyTest, ApproximationAndFeasibility) {
  const double ratio = 0.5 - 1.0 / (2.0 * std::exp(1.0));
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance in = RandomInstance(rng);
    const GreedySelection g = SelectGreedy(in.costs, in.sets, in.delta);
    double total = 0.0;
    std::set<std::size_t> covered;
    for (std::size_t i : g.selected) {
      total += in.costs[i];
      covered.insert(in.sets[i].begin(), in.sets[i].end());
    }
    EXPECT_LE(total, in.delta) << trial;
    EXPECT_EQ(covered.size(), g.covered) << trial;
    EXPECT_GE(static_cast<double>(g.covered), ratio * BruteForceOptimum(in)) << trial;
  }
}

TEST(GreedyTest, CoverageNeverDropsAsBudgetGrows) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance in = RandomInstance(rng);
    std::size_t prev = 0;
    for (double delta = 0.001; delta < 0.05; delta += 0.001) {
      const std::size_t covered = SelectGreedy(in.costs, in.sets, delta).covered;
      EXPECT_GE(covered, prev) << trial << " " << delta;
      prev = covered;
    }
  }
}

TEST(GreedyTest, Deterministic) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance in = RandomInstance(rng);
    const GreedySelection a = SelectGreedy(in.costs, in.sets, in.delta);
    const GreedySelection b = SelectGreedy(in.costs, in.sets, in.delta);
    EXPECT_EQ(a.selected, b.selected);
    EXPECT_EQ(a.fpr_total, b.fpr_total);
  }
}

TEST(GreedyTest, ProgramCarriesConstraints) {
  std::vector<DqConstraint> qs(3);
  qs[0].fpr_bound = 0.004;
  qs[1].fpr_bound = 0.002;
  qs[2].fpr_bound = 0.003;
  qs[1].metric = MetricId::kMean;
  const std::vector<std::vector<std::size_t>> sets = {{1, 2, 3}, {3, 4}, {5}};
  const DqProgram p = GreedySelect(qs, sets, 0.006);
  ASSERT_EQ(p.constraints.size(), 2u);
  EXPECT_EQ(p.constraints[0], qs[1]);
  EXPECT_EQ(p.recall_covered, 4u);
  EXPECT_DOUBLE_EQ(p.fpr_total, 0.006);
  EXPECT_EQ(p.delta, 0.006);
}

}  // namespace
}  // namespace dqprog
