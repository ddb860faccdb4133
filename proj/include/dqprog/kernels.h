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

#ifndef DQPROG_KERNELS_H_
#define DQPROG_KERNELS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dqprog/column.h"

namespace dqprog {

// Category counts, sorted by key so that downstream sums are order-stable.
struct CategoryHistogram {
  std::vector<std::pair<std::string, std::uint64_t>> bins;
  std::uint64_t total = 0;

  bool operator==(const CategoryHistogram&) const = default;
};

// Everything the metric catalog needs from one snapshot, computed in a
// single pass so that a fit touches each row once per snapshot.
struct ColumnProfile {
  Dtype dtype = Dtype::kNumeric;
  std::size_t rows = 0;
  std::size_t non_null = 0;
  std::size_t distinct = 0;

  // Numeric only.
  std::vector<double> sorted_values;
  double sum = 0.0;
  double mean = 0.0;
  double sq_dev = 0.0;  // sum of squared deviations from mean

  // Categorical only. Character counts are in code points.
  std::uint64_t char_count = 0;
  std::uint64_t letter_count = 0;
  std::uint64_t digit_count = 0;
  std::uint64_t punct_count = 0;
  CategoryHistogram values;
  CategoryHistogram patterns;
};

// Maps every code point: ASCII digit -> "\d", ASCII letter -> "\l",
// anything else -> "-". No run compression.
std::string GeneratePattern(std::string_view value);

// Number of code points in a UTF-8 string.
std::size_t CodePointCount(std::string_view value);

namespace kernels {

// Straight-line reference; kept for differential testing of the parallel
// kernels.
namespace serial {
ColumnProfile Profile(const ColumnSnapshot& snapshot);
}  // namespace serial

// OpenMP kernels. Reductions run over fixed-size chunks combined in chunk
// order, so results do not depend on the thread count.
namespace parallel {
ColumnProfile Profile(const ColumnSnapshot& snapshot);
}  // namespace parallel

}  // namespace kernels

inline ColumnProfile Profile(const ColumnSnapshot& snapshot) {
  return kernels::parallel::Profile(snapshot);
}

}  // namespace dqprog

#endif  // DQPROG_KERNELS_H_
