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

#include "dqprog/metric_id.h"

#include <set>

#include <gtest/gtest.h>

#include "dqprog/error.h"

namespace dqprog {
namespace {

TEST(MetricIdTest, CatalogSizes) {
  EXPECT_EQ(MetricsFor(Dtype::kNumeric).size(), 14u);
  EXPECT_EQ(MetricsFor(Dtype::kCategorical).size(), 20u);
}

TEST(MetricIdTest, NamesRoundTrip) {
  std::set<std::string_view> names;
  for (Dtype d : {Dtype::kNumeric, Dtype::kCategorical}) {
    for (MetricId m : MetricsFor(d)) {
      EXPECT_EQ(ParseMetric(MetricName(m)), m);
      EXPECT_TRUE(MetricAppliesTo(m, d));
      names.insert(MetricName(m));
    }
  }
  EXPECT_EQ(names.size(), 29u);
}

TEST(MetricIdTest, ArityAndBoundKind) {
  EXPECT_EQ(MetricArity(MetricId::kCompleteRatio), Arity::kSingle);
  EXPECT_EQ(MetricArity(MetricId::kEmd), Arity::kTwo);
  // Distances only grow under drift: one-sided.
  for (MetricId m : MetricsFor(Dtype::kCategorical)) {
    if (MetricArity(m) == Arity::kTwo) EXPECT_EQ(MetricBoundKind(m), BoundKind::kCantelli);
  }
  EXPECT_EQ(MetricBoundKind(MetricId::kMean), BoundKind::kClt);
  EXPECT_EQ(MetricBoundKind(MetricId::kMin), BoundKind::kChebyshev);
}

TEST(MetricIdTest, DtypeApplicability) {
  EXPECT_FALSE(MetricAppliesTo(MetricId::kMean, Dtype::kCategorical));
  EXPECT_FALSE(MetricAppliesTo(MetricId::kStrLen, Dtype::kNumeric));
  EXPECT_TRUE(MetricAppliesTo(MetricId::kJsDiv, Dtype::kNumeric));
  EXPECT_TRUE(MetricAppliesTo(MetricId::kJsDiv, Dtype::kCategorical));
}

TEST(MetricIdTest, UnknownName) {
  try {
    ParseMetric("mode");
    FAIL();
  } catch (const DqError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
  EXPECT_EQ(ParseBoundKind("cantelli"), BoundKind::kCantelli);
  EXPECT_THROW(ParseBoundKind("hoeffding"), DqError);
}

}  // namespace
}  // namespace dqprog
