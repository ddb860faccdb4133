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

// Helpers shared by the serial and parallel profiling kernels.

#ifndef DQPROG_SRC_KERNELS_COMMON_H_
#define DQPROG_SRC_KERNELS_COMMON_H_

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dqprog/kernels.h"

namespace dqprog::internal {

struct CharStats {
  std::uint64_t chars = 0;
  std::uint64_t letters = 0;
  std::uint64_t digits = 0;
  std::uint64_t punct = 0;
};

inline bool IsContinuationByte(unsigned char c) { return (c & 0xC0) == 0x80; }

inline CharStats CountChars(std::string_view value) {
  CharStats s;
  for (unsigned char c : value) {
    if (IsContinuationByte(c)) continue;
    ++s.chars;
    if (c >= '0' && c <= '9') {
      ++s.digits;
    } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      ++s.letters;
    } else if (c < 0x80 && ((c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
                            (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E))) {
      ++s.punct;
    }
  }
  return s;
}

template <typename Map>
CategoryHistogram SortedHistogram(const Map& counts) {
  CategoryHistogram h;
  h.bins.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    h.bins.emplace_back(std::string(key), count);
    h.total += count;
  }
  std::sort(h.bins.begin(), h.bins.end());
  return h;
}

}  // namespace dqprog::internal

#endif  // DQPROG_SRC_KERNELS_COMMON_H_
