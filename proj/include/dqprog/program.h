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

#ifndef DQPROG_PROGRAM_H_
#define DQPROG_PROGRAM_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dqprog/column.h"
#include "dqprog/constraints.h"
#include "dqprog/metric_id.h"

namespace dqprog {

// Trailing raw metric values per metric, oldest first. Two-distribution
// metrics store their consecutive-pair values.
using TransformContext = std::map<MetricId, std::vector<double>>;

// A conjunctive DQ program: a batch passes iff every constraint holds.
struct DqProgram {
  std::string column_id;
  Dtype dtype = Dtype::kNumeric;
  double delta = 0.0;
  double fpr_total = 0.0;
  std::size_t recall_covered = 0;
  std::vector<DqConstraint> constraints;
  TransformContext transform_context;

  bool operator==(const DqProgram&) const = default;
};

}  // namespace dqprog

#endif  // DQPROG_PROGRAM_H_
