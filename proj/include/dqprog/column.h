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

#ifndef DQPROG_COLUMN_H_
#define DQPROG_COLUMN_H_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dqprog {

enum class Dtype { kNumeric, kCategorical };

std::string_view DtypeName(Dtype dtype);
// Accepts "numeric" / "categorical"; throws DqError(kSchema) otherwise.
Dtype ParseDtype(std::string_view name);

using NumericCells = std::vector<std::optional<double>>;
using TextCells = std::vector<std::optional<std::string>>;

// One execution's values for one column. Numeric NaN cells and empty text
// cells are treated as null by every metric.
struct ColumnSnapshot {
  std::string column_id;
  std::variant<NumericCells, TextCells> cells;
  std::uint64_t execution_index = 0;

  static ColumnSnapshot Numeric(std::string id, NumericCells values,
                                std::uint64_t index = 0) {
    return {std::move(id), std::move(values), index};
  }
  static ColumnSnapshot Text(std::string id, TextCells values,
                             std::uint64_t index = 0) {
    return {std::move(id), std::move(values), index};
  }

  Dtype dtype() const {
    return std::holds_alternative<NumericCells>(cells) ? Dtype::kNumeric
                                                       : Dtype::kCategorical;
  }
  std::size_t rows() const {
    return std::visit([](const auto& v) { return v.size(); }, cells);
  }
  const NumericCells& numeric() const { return std::get<NumericCells>(cells); }
  const TextCells& text() const { return std::get<TextCells>(cells); }
  NumericCells& numeric() { return std::get<NumericCells>(cells); }
  TextCells& text() { return std::get<TextCells>(cells); }

  bool operator==(const ColumnSnapshot&) const = default;
};

inline bool IsNull(const std::optional<double>& cell) {
  return !cell.has_value() || std::isnan(*cell);
}
inline bool IsNull(const std::optional<std::string>& cell) {
  return !cell.has_value() || cell->empty();
}

}  // namespace dqprog

#endif  // DQPROG_COLUMN_H_
