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

#include <algorithm>
#include <string>
#include <string_view>
#include <unordered_map>

#include "dqprog/kernels.h"
#include "kernels_common.h"

namespace dqprog {

std::string GeneratePattern(std::string_view value) {
  std::string out;
  out.reserve(value.size() * 2);
  for (unsigned char c : value) {
    if (internal::IsContinuationByte(c)) continue;
    if (c >= '0' && c <= '9') {
      out += "\\d";
    } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      out += "\\l";
    } else {
      out += '-';
    }
  }
  return out;
}

std::size_t CodePointCount(std::string_view value) {
  return static_cast<std::size_t>(
      std::count_if(value.begin(), value.end(), [](unsigned char c) {
        return !internal::IsContinuationByte(c);
      }));
}

namespace kernels::serial {
namespace {

ColumnProfile NumericProfile(const NumericCells& cells) {
  ColumnProfile p;
  p.dtype = Dtype::kNumeric;
  p.rows = cells.size();
  for (const auto& cell : cells) {
    if (IsNull(cell)) continue;
    p.sorted_values.push_back(*cell);
    p.sum += *cell;
  }
  p.non_null = p.sorted_values.size();
  if (p.non_null == 0) return p;
  p.mean = p.sum / static_cast<double>(p.non_null);
  std::sort(p.sorted_values.begin(), p.sorted_values.end());
  for (double v : p.sorted_values) p.sq_dev += (v - p.mean) * (v - p.mean);
  p.distinct = 1;
  for (std::size_t i = 1; i < p.non_null; ++i) {
    if (p.sorted_values[i] != p.sorted_values[i - 1]) ++p.distinct;
  }
  return p;
}

ColumnProfile TextProfile(const TextCells& cells) {
  ColumnProfile p;
  p.dtype = Dtype::kCategorical;
  p.rows = cells.size();
  std::unordered_map<std::string_view, std::uint64_t> counts;
  for (const auto& cell : cells) {
    if (IsNull(cell)) continue;
    ++counts[*cell];
    ++p.non_null;
  }
  p.values = internal::SortedHistogram(counts);
  p.distinct = p.values.bins.size();
  std::unordered_map<std::string, std::uint64_t> patterns;
  for (const auto& [value, count] : p.values.bins) {
    const internal::CharStats s = internal::CountChars(value);
    p.char_count += s.chars * count;
    p.letter_count += s.letters * count;
    p.digit_count += s.digits * count;
    p.punct_count += s.punct * count;
    patterns[GeneratePattern(value)] += count;
  }
  p.patterns = internal::SortedHistogram(patterns);
  return p;
}

}  // namespace

ColumnProfile Profile(const ColumnSnapshot& snapshot) {
  if (snapshot.dtype() == Dtype::kNumeric) {
    return NumericProfile(snapshot.numeric());
  }
  return TextProfile(snapshot.text());
}

}  // namespace kernels::serial
}  // namespace dqprog
