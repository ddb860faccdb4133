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

#ifndef DQPROG_PROGRAM_IO_H_
#define DQPROG_PROGRAM_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "dqprog/program.h"

namespace dqprog {

inline constexpr int kProgramFormatVersion = 1;

std::string SerializeProgram(const DqProgram& program);

// Throws kParse for malformed input (the message names the offending field)
// and kFormatVersion for an unsupported format_version.
DqProgram DeserializeProgram(std::string_view text);

void SaveProgram(const DqProgram& program, const std::filesystem::path& path);
DqProgram LoadProgram(const std::filesystem::path& path);

// Writes via a temporary file in the same directory and renames it into place.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view content);
std::string ReadFile(const std::filesystem::path& path);

}  // namespace dqprog

#endif  // DQPROG_PROGRAM_IO_H_
