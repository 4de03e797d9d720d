// Copyright 2026 The contractscan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "contractscan/record_file.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "test_util.h"

namespace contractscan {
namespace {

using ::contractscan::testing::Parse;
using ::contractscan::testing::SnapshotOf;
using ::testing::HasSubstr;

SnapshotReport Sample() {
  std::vector<SourceUnit> units = {
      Parse("src/A.java", R"(package p;
import androidx.annotation.NonNull;
class A {
  @NonNull String f;
  A(@NonNull String s) { if (s.isEmpty()) throw new IllegalArgumentException("é"); }
  void g(int x) { assert x > 0 : "x"; }
})"),
      Parse("src/B.kt", R"(package p
fun h(x: Int?) { require(x != null) { "x" } }
)"),
  };
  SnapshotReport report = SnapshotOf(units, "proj", "v1.0");
  report.tool.catalog_hash = contractscan::testing::DefaultCatalog().Hash();
  report.counts_by_language[Language::kJava] = CountArtifacts(std::span(&units[0], 1));
  report.counts_by_language[Language::kKotlin] = CountArtifacts(std::span(&units[1], 1));
  return report;
}

TEST(RecordFile, RoundTripIsByteIdentical) {
  const SnapshotReport report = Sample();
  ASSERT_FALSE(report.records.empty());
  const std::string text = SerializeSnapshot(report);
  absl::StatusOr<SnapshotReport> parsed = ParseSnapshot(text);
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_EQ(SerializeSnapshot(*parsed), text);
  EXPECT_EQ(parsed->records, report.records);
  EXPECT_EQ(parsed->artifact_counts, report.artifact_counts);
  EXPECT_EQ(parsed->project_id, "proj");
  EXPECT_EQ(parsed->snapshot_id, "v1.0");
  EXPECT_EQ(parsed->members.size(), report.members.size());
}

TEST(RecordFile, RecordJsonFields) {
  ContractRecord r;
  r.file_path = "a/B.java";
  r.construct_id = "AndroidXNonNull";
  r.category = Category::kAnnotation;
  r.kind = ContractKind::kPre;
  r.artifact_name = "f";
  r.owner_class = "a.B";
  r.parameter_index = 2;
  r.line = 7;
  const std::string dumped = RecordToJson(r).dump();
  EXPECT_THAT(dumped, HasSubstr("\"category\":\"Annotation\""));
  EXPECT_THAT(dumped, HasSubstr("\"kind\":\"Pre\""));
  EXPECT_THAT(dumped, HasSubstr("\"parameterIndex\":2"));
  absl::StatusOr<ContractRecord> back = RecordFromJson(nlohmann::json::parse(dumped));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, r);

  r.parameter_index.reset();
  EXPECT_THAT(RecordToJson(r).dump(), ::testing::Not(HasSubstr("parameterIndex")));
}

TEST(RecordFile, RejectsMalformedInput) {
  EXPECT_FALSE(ParseSnapshot("not json").ok());
  EXPECT_FALSE(ParseSnapshot("{}").ok());
  std::string text = SerializeSnapshot(Sample());
  const size_t at = text.find("\"Pre\"");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 5, "\"Sideways\"");
  EXPECT_FALSE(ParseSnapshot(text).ok());
}

TEST(RecordFile, WriteAndReadFile) {
  const std::filesystem::path path =
      std::filesystem::path(::testing::TempDir()) / "contractscan_rt" / "s.records.json";
  const SnapshotReport report = Sample();
  ASSERT_TRUE(WriteSnapshotFile(path, report).ok());
  absl::StatusOr<SnapshotReport> read = ReadSnapshotFile(path);
  ASSERT_TRUE(read.ok()) << read.status();
  EXPECT_EQ(SerializeSnapshot(*read), SerializeSnapshot(report));
  EXPECT_EQ(ReadSnapshotFile(path.parent_path() / "missing.json").status().code(),
            absl::StatusCode::kNotFound);
}

}  // namespace
}  // namespace contractscan
