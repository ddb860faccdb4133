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

#ifndef DQPROG_ERROR_H_
#define DQPROG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dqprog {

enum class ErrorCode {
  kInvalidArgument,
  kNoData,
  kMetricDtypeMismatch,
  kTooShort,
  kNonFinite,
  kNonPositiveUnderLog,
  kInapplicableIssue,
  kMissingDonor,
  kContractViolation,
  kParse,
  kFormatVersion,
  kSchema,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as DqError; callers switch on code().
class DqError : public std::runtime_error {
 public:
  DqError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dqprog

#endif  // DQPROG_ERROR_H_
