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

#include "dqprog/csv_store.h"

#include <fstream>

#include <gtest/gtest.h>

#include "dqprog/error.h"
#include "dqprog/program_io.h"
#include "test_util.h"

namespace dqprog {
namespace {

const char kSchema[] = R"({"id": "numeric", "name": "categorical", "score": "numeric"})";

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const DqError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no DqError thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(CsvTest, ParsesQuotedFields) {
  const auto r = ParseCsv("a,b\r\n\"x, y\",\"say \"\"hi\"\"\"\n\"multi\nline\",\n");
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[1], (std::vector<std::string>{"x, y", "say \"hi\""}));
  EXPECT_EQ(r[2], (std::vector<std::string>{"multi\nline", ""}));
  EXPECT_EQ(ParseCsv("a\n1").size(), 2u);
  EXPECT_EQ(CodeOf([] { ParseCsv("a\n\"open"); }), ErrorCode::kParse);
}

TEST(CsvTest, FormatFieldRoundTrips) {
  for (std::string f : {"plain", "with,comma", "quote\"d", "new\nline", " padded "}) {
    const auto r = ParseCsv(FormatCsvField(f) + "\n");
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0][0], f);
  }
}

TEST(SchemaTest, Parse) {
  const Schema s = ParseSchema(kSchema);
  ASSERT_EQ(s.columns.size(), 3u);
  EXPECT_EQ(s.columns[1].first, "name");
  EXPECT_EQ(*s.find("name"), Dtype::kCategorical);
  EXPECT_EQ(s.find("other"), nullptr);
  EXPECT_EQ(CodeOf([] { ParseSchema(R"({"a": "text"})"); }), ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] { ParseSchema("[1]"); }), ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] { ParseSchema("{"); }), ErrorCode::kSchema);
}

TEST(BatchTest, MatchesColumnsByName) {
  const Schema s = ParseSchema(kSchema);
  const Batch b = ParseBatch("score,id,name\n1.5,7,alpha\n,8,\nabc,9,\"b,c\"\n", s, 3);
  ASSERT_EQ(b.columns.size(), 3u);
  EXPECT_EQ(b.columns[0].column_id, "id");
  EXPECT_EQ(b.columns[0].numeric(), (NumericCells{7.0, 8.0, 9.0}));
  EXPECT_EQ(b.columns[1].text(), (TextCells{"alpha", std::nullopt, "b,c"}));
  EXPECT_EQ(b.columns[2].numeric(), (NumericCells{1.5, std::nullopt, std::nullopt}));
  EXPECT_EQ(b.columns[2].execution_index, 3u);
  // "abc" is not a number: null plus one warning. "" is just null.
  EXPECT_EQ(b.parse_warnings, 1u);
}

TEST(BatchTest, HeaderErrors) {
  const Schema s = ParseSchema(kSchema);
  EXPECT_EQ(CodeOf([&] { ParseBatch("id,name\n1,a\n", s); }), ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([&] { ParseBatch("id,name,score,extra\n1,a,2,3\n", s); }),
            ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([&] { ParseBatch("id,id,name,score\n1,1,a,2\n", s); }), ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([&] { ParseBatch("id,name,score\n1,a\n", s); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([&] { ParseBatch("", s); }), ErrorCode::kParse);
}

TEST(BatchTest, ParseColumnIgnoresOthers) {
  std::size_t warnings = 0;
  const auto c = ParseColumn("a,b\n1,x\n2,\nz,y\n", "a", Dtype::kNumeric, 4, &warnings);
  EXPECT_EQ(c.numeric(), (NumericCells{1.0, 2.0, std::nullopt}));
  EXPECT_EQ(warnings, 1u);
  EXPECT_EQ(ParseColumn("a,b\n1,x\n2,\n", "b", Dtype::kCategorical).text(),
            (TextCells{"x", std::nullopt}));
  EXPECT_EQ(CodeOf([] { ParseColumn("a\n1\n", "b", Dtype::kNumeric); }), ErrorCode::kSchema);
}

TEST(BatchTest, SingleColumnCsvRoundTrip) {
  const auto num = ColumnSnapshot::Numeric("v", {1.25, std::nullopt, -3e-7, 1e300});
  EXPECT_EQ(ParseColumn(FormatColumnCsv(num), "v", Dtype::kNumeric).numeric(), num.numeric());
  const auto text = ColumnSnapshot::Text("t", {"a", std::nullopt, " pad", "x,\"y\""});
  EXPECT_EQ(ParseColumn(FormatColumnCsv(text), "t", Dtype::kCategorical).text(), text.text());
}

TEST(IngestTest, SixtyFilesThreeColumns) {
  testing::TempDir dir;
  WriteFileAtomic(dir / "schema.json", kSchema);
  std::filesystem::create_directories(dir / "store");
  for (int i = 59; i >= 0; --i) {
    char name[32];
    std::snprintf(name, sizeof(name), "batch_%03d.csv", i);
    // Alternate header order.
    const std::string body = i % 2 ? "name,score,id\nn" + std::to_string(i) + ",0.5," +
                                         std::to_string(i) + "\n"
                                   : "id,name,score\n" + std::to_string(i) + ",n" +
                                         std::to_string(i) + ",0.5\n";
    WriteFileAtomic(dir / "store" / name, body);
  }
  WriteFileAtomic(dir / "store" / "notes.txt", "ignored");
  const SnapshotStore store = Ingest(dir / "store", dir / "schema.json");
  ASSERT_EQ(store.histories.size(), 3u);
  for (const auto& [name, history] : store.histories) EXPECT_EQ(history.size(), 60u);
  const auto& ids = store.history("id");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(ids[i].execution_index, i);
    EXPECT_EQ(ids[i].numeric()[0], static_cast<double>(i));
  }
  EXPECT_EQ(CodeOf([&] { store.history("nope"); }), ErrorCode::kSchema);
}

TEST(IngestTest, Errors) {
  testing::TempDir dir;
  WriteFileAtomic(dir / "schema.json", kSchema);
  EXPECT_EQ(CodeOf([&] { Ingest(dir / "none", dir / "schema.json"); }), ErrorCode::kIo);
  EXPECT_EQ(CodeOf([&] { Ingest(dir.path(), dir / "missing.json"); }), ErrorCode::kIo);
  std::filesystem::create_directories(dir / "store");
  WriteFileAtomic(dir / "store" / "000.csv", "id,name,score\n1,a,2\n");
  WriteFileAtomic(dir / "store" / "001.csv", "id,name\n1,a\n");
  EXPECT_EQ(CodeOf([&] { Ingest(dir / "store", dir / "schema.json"); }), ErrorCode::kSchema);
}

}  // namespace
}  // namespace dqprog
