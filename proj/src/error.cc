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

#include "dqprog/error.h"

namespace dqprog {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kNoData: return "no data";
    case ErrorCode::kMetricDtypeMismatch: return "metric/dtype mismatch";
    case ErrorCode::kTooShort: return "series too short";
    case ErrorCode::kNonFinite: return "non-finite value";
    case ErrorCode::kNonPositiveUnderLog: return "non-positive under log transform";
    case ErrorCode::kInapplicableIssue: return "inapplicable issue";
    case ErrorCode::kMissingDonor: return "missing donor";
    case ErrorCode::kContractViolation: return "contract violation";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kFormatVersion: return "format version";
    case ErrorCode::kSchema: return "schema error";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown";
}

}  // namespace dqprog
