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

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dqprog/kernels.h"
#include "kernels_common.h"

namespace dqprog::kernels::parallel {
namespace {

constexpr std::size_t kChunk = 16384;

std::size_t ChunkCount(std::size_t n) { return (n + kChunk - 1) / kChunk; }

// Sorts each chunk independently, then merges neighbouring runs pairwise.
void ChunkedSort(std::vector<double>& v) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  const std::int64_t chunk = static_cast<std::int64_t>(kChunk);
  const std::int64_t chunks = (n + chunk - 1) / chunk;
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::sort(v.begin() + c * chunk, v.begin() + std::min(n, (c + 1) * chunk));
  }
  for (std::int64_t width = chunk; width < n; width *= 2) {
    const std::int64_t pairs = (n + 2 * width - 1) / (2 * width);
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < pairs; ++p) {
      const std::int64_t lo = p * 2 * width;
      const std::int64_t mid = std::min(n, lo + width);
      const std::int64_t hi = std::min(n, lo + 2 * width);
      std::inplace_merge(v.begin() + lo, v.begin() + mid, v.begin() + hi);
    }
  }
}

ColumnProfile NumericProfile(const NumericCells& cells) {
  ColumnProfile p;
  p.dtype = Dtype::kNumeric;
  p.rows = cells.size();
  const std::int64_t chunks = static_cast<std::int64_t>(ChunkCount(cells.size()));
  std::vector<std::size_t> offsets(chunks + 1, 0);
  std::vector<double> partial(chunks, 0.0);

#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::size_t end = std::min(cells.size(), (c + 1) * kChunk);
    std::size_t count = 0;
    for (std::size_t i = c * kChunk; i < end; ++i) count += !IsNull(cells[i]);
    offsets[c + 1] = count;
  }
  for (std::int64_t c = 0; c < chunks; ++c) offsets[c + 1] += offsets[c];
  p.non_null = offsets[chunks];
  p.sorted_values.resize(p.non_null);

#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::size_t end = std::min(cells.size(), (c + 1) * kChunk);
    std::size_t out = offsets[c];
    double s = 0.0;
    for (std::size_t i = c * kChunk; i < end; ++i) {
      if (IsNull(cells[i])) continue;
      p.sorted_values[out++] = *cells[i];
      s += *cells[i];
    }
    partial[c] = s;
  }
  for (double s : partial) p.sum += s;
  if (p.non_null == 0) return p;
  p.mean = p.sum / static_cast<double>(p.non_null);

  ChunkedSort(p.sorted_values);

  const std::int64_t vchunks = static_cast<std::int64_t>(ChunkCount(p.non_null));
  std::vector<double> dev(vchunks, 0.0);
  std::vector<std::size_t> breaks(vchunks, 0);
  const std::vector<double>& v = p.sorted_values;
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < vchunks; ++c) {
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min(v.size(), begin + kChunk);
    double d = 0.0;
    std::size_t b = 0;
    for (std::size_t i = begin; i < end; ++i) {
      d += (v[i] - p.mean) * (v[i] - p.mean);
      if (i > 0 && v[i] != v[i - 1]) ++b;
    }
    dev[c] = d;
    breaks[c] = b;
  }
  p.distinct = 1;
  for (std::int64_t c = 0; c < vchunks; ++c) {
    p.sq_dev += dev[c];
    p.distinct += breaks[c];
  }
  return p;
}

ColumnProfile TextProfile(const TextCells& cells) {
  ColumnProfile p;
  p.dtype = Dtype::kCategorical;
  p.rows = cells.size();
  const std::int64_t chunks = static_cast<std::int64_t>(ChunkCount(cells.size()));
  std::vector<std::unordered_map<std::string_view, std::uint64_t>> local(chunks);

#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::size_t end = std::min(cells.size(), (c + 1) * kChunk);
    auto& m = local[c];
    for (std::size_t i = c * kChunk; i < end; ++i) {
      if (!IsNull(cells[i])) ++m[*cells[i]];
    }
  }
  std::unordered_map<std::string_view, std::uint64_t> counts;
  for (auto& m : local) {
    for (const auto& [k, n] : m) counts[k] += n;
    m.clear();
  }
  p.values = internal::SortedHistogram(counts);
  p.non_null = p.values.total;
  p.distinct = p.values.bins.size();

  const auto& bins = p.values.bins;
  const std::int64_t keys = static_cast<std::int64_t>(bins.size());
  std::vector<std::string> patterns(keys);
  std::uint64_t chars = 0, letters = 0, digits = 0, punct = 0;
#pragma omp parallel for schedule(static) reduction(+ : chars, letters, digits, punct)
  for (std::int64_t k = 0; k < keys; ++k) {
    const auto& [value, count] = bins[k];
    const internal::CharStats s = internal::CountChars(value);
    chars += s.chars * count;
    letters += s.letters * count;
    digits += s.digits * count;
    punct += s.punct * count;
    patterns[k] = GeneratePattern(value);
  }
  p.char_count = chars;
  p.letter_count = letters;
  p.digit_count = digits;
  p.punct_count = punct;

  std::unordered_map<std::string_view, std::uint64_t> pattern_counts;
  for (std::int64_t k = 0; k < keys; ++k) pattern_counts[patterns[k]] += bins[k].second;
  p.patterns = internal::SortedHistogram(pattern_counts);
  return p;
}

}  // namespace

ColumnProfile Profile(const ColumnSnapshot& snapshot) {
  if (snapshot.dtype() == Dtype::kNumeric) {
    return NumericProfile(snapshot.numeric());
  }
  return TextProfile(snapshot.text());
}

}  // namespace dqprog::kernels::parallel
