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

#ifndef DQPROG_SYNTHETIC_DATA_H_
#define DQPROG_SYNTHETIC_DATA_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dqprog/column.h"

namespace dqprog {

// Seeded clean column histories for tests and benchmarks.
//
// Numeric columns are Gaussian with a slowly drifting mean; categorical
// columns draw from a Zipfian distribution over a small vocabulary. Row
// counts jitter around a per-column base and a few cells are null.
struct SyntheticOptions {
  std::size_t numeric_columns = 50;
  std::size_t categorical_columns = 50;
  std::size_t snapshots = 40;
  std::size_t min_rows = 300;
  std::size_t max_rows = 500;
  std::uint64_t seed = 1;
};

std::vector<ColumnSnapshot> GenerateNumericHistory(const std::string& column_id,
                                                   std::size_t snapshots, std::size_t rows,
                                                   std::uint64_t seed);
std::vector<ColumnSnapshot> GenerateCategoricalHistory(const std::string& column_id,
                                                       std::size_t snapshots,
                                                       std::size_t rows, std::uint64_t seed);

// Numeric columns first ("num_000", ...), then categorical ("cat_000", ...).
std::vector<std::vector<ColumnSnapshot>> GenerateSyntheticStore(const SyntheticOptions& options);

}  // namespace dqprog

#endif  // DQPROG_SYNTHETIC_DATA_H_
