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

#include "dqprog/column.h"

#include <string>

#include "dqprog/error.h"

namespace dqprog {

std::string_view DtypeName(Dtype dtype) {
  return dtype == Dtype::kNumeric ? "numeric" : "categorical";
}

Dtype ParseDtype(std::string_view name) {
  if (name == "numeric") return Dtype::kNumeric;
  if (name == "categorical") return Dtype::kCategorical;
  throw DqError(ErrorCode::kSchema,
                "unknown dtype '" + std::string(name) + "'");
}

}  // namespace dqprog
