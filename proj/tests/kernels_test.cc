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

#include "dqprog/kernels.h"

#include <random>

#include <gtest/gtest.h>

#include "dqprog/synthetic_data.h"

namespace dqprog {
namespace {

void ExpectSameProfile(const ColumnProfile& a, const ColumnProfile& b) {
  EXPECT_EQ(a.rows, b.rows);
  EXPECT_EQ(a.non_null, b.non_null);
  EXPECT_EQ(a.distinct, b.distinct);
  EXPECT_EQ(a.sorted_values, b.sorted_values);
  // Chunked summation may round differently from the straight loop.
  EXPECT_NEAR(a.sum, b.sum, 1e-9 * (1.0 + std::abs(a.sum)));
  EXPECT_NEAR(a.mean, b.mean, 1e-9 * (1.0 + std::abs(a.mean)));
  EXPECT_NEAR(a.sq_dev, b.sq_dev, 1e-9 * (1.0 + a.sq_dev));
  EXPECT_EQ(a.char_count, b.char_count);
  EXPECT_EQ(a.letter_count, b.letter_count);
  EXPECT_EQ(a.digit_count, b.digit_count);
  EXPECT_EQ(a.punct_count, b.punct_count);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.patterns, b.patterns);
}

TEST(PatternTest, PerCharacter) {
  EXPECT_EQ(GeneratePattern(""), "");
  EXPECT_EQ(GeneratePattern("en-GB"), "\\l\\l-\\l\\l");
  EXPECT_EQ(GeneratePattern("19.99"), "\\d\\d-\\d\\d");
  EXPECT_EQ(GeneratePattern("a1"), "\\l\\d");
  EXPECT_EQ(GeneratePattern("$ 5"), "--\\d");
}

TEST(PatternTest, OneTokenPerCodePoint) {
  for (std::string s : {"abc", "x-9 Z", "naïve", "日本1", ""}) {
    const std::string p = GeneratePattern(s);
    std::size_t tokens = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == '\\') ++i;
      ++tokens;
    }
    EXPECT_EQ(tokens, CodePointCount(s)) << s;
  }
}

TEST(KernelsTest, NumericSmall) {
  auto c = ColumnSnapshot::Numeric("x", {3.0, std::nullopt, 1.0, 3.0});
  const ColumnProfile p = kernels::serial::Profile(c);
  EXPECT_EQ(p.rows, 4u);
  EXPECT_EQ(p.non_null, 3u);
  EXPECT_EQ(p.distinct, 2u);
  EXPECT_EQ(p.sorted_values, (std::vector<double>{1.0, 3.0, 3.0}));
  EXPECT_DOUBLE_EQ(p.sum, 7.0);
  ExpectSameProfile(p, kernels::parallel::Profile(c));
}

TEST(KernelsTest, TextSmall) {
  auto c = ColumnSnapshot::Text("s", {"ab1", "", "ab1", "c.d", std::nullopt});
  const ColumnProfile p = kernels::serial::Profile(c);
  EXPECT_EQ(p.non_null, 3u);
  EXPECT_EQ(p.distinct, 2u);
  EXPECT_EQ(p.char_count, 9u);
  EXPECT_EQ(p.letter_count, 6u);
  EXPECT_EQ(p.digit_count, 2u);
  EXPECT_EQ(p.punct_count, 1u);
  EXPECT_EQ(p.values.total, 3u);
  EXPECT_EQ(p.patterns.bins.size(), 2u);
  ExpectSameProfile(p, kernels::parallel::Profile(c));
}

// Sizes straddle the parallel chunk size.
class KernelsDifferentialTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(KernelsDifferentialTest, NumericMatchesSerial) {
  auto c = GenerateNumericHistory("x", 1, GetParam(), GetParam()).front();
  ExpectSameProfile(kernels::serial::Profile(c), kernels::parallel::Profile(c));
}

TEST_P(KernelsDifferentialTest, TextMatchesSerial) {
  auto c = GenerateCategoricalHistory("s", 1, GetParam(), GetParam()).front();
  ExpectSameProfile(kernels::serial::Profile(c), kernels::parallel::Profile(c));
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelsDifferentialTest,
                         ::testing::Values(0, 1, 17, 16384, 16385, 50000, 120001));

TEST(KernelsTest, EmptyColumn) {
  const ColumnProfile p = kernels::parallel::Profile(ColumnSnapshot::Numeric("x", {}));
  EXPECT_EQ(p.rows, 0u);
  EXPECT_EQ(p.non_null, 0u);
}

}  // namespace
}  // namespace dqprog
