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

#include "dqprog/synthetic_data.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

namespace dqprog {
namespace {

using Rng = std::mt19937_64;

double Uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t JitteredRows(Rng& rng, std::size_t rows) {
  const double sd = 0.02 * static_cast<double>(rows);
  if (rows < 50) return rows;
  const double r = static_cast<double>(rows) + std::normal_distribution<double>(0.0, sd)(rng);
  return static_cast<std::size_t>(std::max(1.0, std::round(r)));
}

std::string Word(Rng& rng, int style) {
  static constexpr std::string_view kConsonants = "bcdfghjklmnprstvz";
  static constexpr std::string_view kVowels = "aeiou";
  auto pick = [&](std::string_view s) {
    return s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
  };
  if (style == 2) {
    std::string code;
    code += static_cast<char>(pick(kConsonants) - 'a' + 'A');
    code += static_cast<char>(pick(kConsonants) - 'a' + 'A');
    char digits[8];
    std::snprintf(digits, sizeof(digits), "-%04d",
                  std::uniform_int_distribution<int>(0, 9999)(rng));
    return code + digits;
  }
  const int syllables = std::uniform_int_distribution<int>(1, 4)(rng);
  std::string w;
  for (int i = 0; i < syllables; ++i) {
    w += pick(kConsonants);
    w += pick(kVowels);
  }
  if (style == 1) w[0] = static_cast<char>(w[0] - 'a' + 'A');
  return w;
}

}  // namespace

std::vector<ColumnSnapshot> GenerateNumericHistory(const std::string& column_id,
                                                   std::size_t snapshots, std::size_t rows,
                                                   std::uint64_t seed) {
  Rng rng(seed);
  double mean = Uniform(rng, 50.0, 5000.0);
  const double sd = mean * Uniform(rng, 0.05, 0.3);
  const double drift = 0.01 * sd;
  const double null_rate = Uniform(rng, 0.0, 0.05);
  std::vector<ColumnSnapshot> out;
  out.reserve(snapshots);
  for (std::size_t t = 0; t < snapshots; ++t) {
    mean += std::normal_distribution<double>(0.0, drift)(rng);
    std::normal_distribution<double> value(mean, sd);
    NumericCells cells(JitteredRows(rng, rows));
    for (auto& cell : cells) {
      const double v = std::round(value(rng) * 100.0) / 100.0;
      if (Uniform(rng, 0.0, 1.0) >= null_rate) cell = v;
    }
    out.push_back(ColumnSnapshot::Numeric(column_id, std::move(cells), t));
  }
  return out;
}

std::vector<ColumnSnapshot> GenerateCategoricalHistory(const std::string& column_id,
                                                       std::size_t snapshots,
                                                       std::size_t rows, std::uint64_t seed) {
  Rng rng(seed);
  const int domain = std::uniform_int_distribution<int>(5, 15)(rng);
  const int style = std::uniform_int_distribution<int>(0, 2)(rng);
  const double exponent = Uniform(rng, 1.0, 1.5);
  const double null_rate = Uniform(rng, 0.0, 0.05);
  std::vector<std::string> vocabulary;
  std::set<std::string> used;
  while (static_cast<int>(vocabulary.size()) < domain) {
    std::string w = Word(rng, style);
    if (used.insert(w).second) vocabulary.push_back(std::move(w));
  }
  std::vector<double> weights;
  for (int i = 1; i <= domain; ++i) weights.push_back(1.0 / std::pow(i, exponent));
  std::discrete_distribution<int> draw(weights.begin(), weights.end());
  std::vector<ColumnSnapshot> out;
  out.reserve(snapshots);
  for (std::size_t t = 0; t < snapshots; ++t) {
    TextCells cells(JitteredRows(rng, rows));
    for (auto& cell : cells) {
      const int k = draw(rng);
      if (Uniform(rng, 0.0, 1.0) >= null_rate) cell = vocabulary[k];
    }
    out.push_back(ColumnSnapshot::Text(column_id, std::move(cells), t));
  }
  return out;
}

std::vector<std::vector<ColumnSnapshot>> GenerateSyntheticStore(const SyntheticOptions& options) {
  Rng rng(options.seed);
  std::vector<std::vector<ColumnSnapshot>> out;
  auto rows = [&] {
    return std::uniform_int_distribution<std::size_t>(options.min_rows, options.max_rows)(rng);
  };
  char name[32];
  for (std::size_t i = 0; i < options.numeric_columns; ++i) {
    std::snprintf(name, sizeof(name), "num_%03zu", i);
    const std::size_t r = rows();
    out.push_back(GenerateNumericHistory(name, options.snapshots, r, rng()));
  }
  for (std::size_t i = 0; i < options.categorical_columns; ++i) {
    std::snprintf(name, sizeof(name), "cat_%03zu", i);
    const std::size_t r = rows();
    out.push_back(GenerateCategoricalHistory(name, options.snapshots, r, rng()));
  }
  return out;
}

}  // namespace dqprog
