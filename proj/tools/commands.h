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

#ifndef DQPROG_TOOLS_COMMANDS_H_
#define DQPROG_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace dqprog::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

struct FitFlags {
  bool single_dist_only = false;
  std::size_t max_clauses = 0;  // 0 = unlimited
  double beta_max = 10.0;
  double beta_step = 0.5;
  std::uint64_t seed = 0;
};

struct FitArgs {
  std::string store;
  std::string schema;
  std::string column;
  double delta = 0.001;
  std::string out;
  FitFlags flags;
};

struct CheckArgs {
  std::string program;
  std::string batch;
  std::string baseline;
  std::string report;  // optional text report path
};

struct InjectArgs {
  std::string batch;
  std::string schema;
  std::uint64_t seed = 0;
  std::string out_dir;
};

struct BenchArgs {
  std::string store;
  std::string schema;
  std::size_t window = 30;
  double delta = 0.001;
  std::uint64_t seed = 0;
  std::string report;  // writes <report>.csv and <report>.json
  FitFlags flags;
};

// Each command prints progress to `out`, problems to `err`, and returns a
// process exit code. Errors never escape as exceptions.
int CmdFit(const FitArgs& args, std::ostream& out, std::ostream& err);
int CmdCheck(const CheckArgs& args, std::ostream& out, std::ostream& err);
int CmdInject(const InjectArgs& args, std::ostream& out, std::ostream& err);
int CmdBench(const BenchArgs& args, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; usage errors return kExitError.
int Main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dqprog::cli

#endif  // DQPROG_TOOLS_COMMANDS_H_
