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

#include "contractscan/evolution.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "random_contracts.h"
#include "test_util.h"

namespace contractscan {
namespace {

using ::contractscan::testing::Parse;
using ::testing::ElementsAre;
using ::testing::IsEmpty;
using ::testing::SizeIs;

using EP = EvolutionPattern;
constexpr ContractKind kPre = ContractKind::kPre;
constexpr ContractKind kPost = ContractKind::kPost;

ContractRecord Rec(ContractKind kind, std::string condition, std::string id = "C",
                   std::optional<int> param = std::nullopt) {
  ContractRecord r;
  r.construct_id = std::move(id);
  r.kind = kind;
  r.condition_text = std::move(condition);
  r.parameter_index = param;
  return r;
}

std::vector<Classification> Diff(const std::vector<ContractRecord>& before,
                                 const std::vector<ContractRecord>& after) {
  return ClassifyDiff(before, after);
}

Classification C(ContractKind kind, EP pattern) { return {kind, pattern}; }
const Classification kUnchanged{std::nullopt, EP::kUnchanged};

TEST(Patterns, NamesCriticalityAndMirror) {
  EXPECT_EQ(PatternName(EP::kPreStrengthened), "PreStrengthened");
  EXPECT_EQ(PatternName(EP::kUnchanged), "Unchanged");
  EXPECT_TRUE(IsCritical(EP::kPreStrengthened));
  EXPECT_TRUE(IsCritical(EP::kPostWeakened));
  EXPECT_FALSE(IsCritical(EP::kPreWeakened));
  EXPECT_FALSE(IsCritical(EP::kPostStrengthened));
  for (EP p : kAllPatterns) EXPECT_EQ(Mirror(Mirror(p)), p);
  EXPECT_EQ(Mirror(EP::kPreStrengthened), EP::kPreWeakened);
  EXPECT_EQ(Mirror(EP::kPostWeakened), EP::kPostStrengthened);
  EXPECT_EQ(Mirror(EP::kMinorChange), EP::kMinorChange);
}

TEST(SplitClauses, TopLevelOnly) {
  EXPECT_THAT(SplitConjuncts("a && (b || c) && d"), ElementsAre("a", "b || c", "d"));
  EXPECT_THAT(SplitDisjuncts("a || b && c"), ElementsAre("a", "b && c"));
  EXPECT_THAT(SplitConjuncts("a || b && c"), ElementsAre("a || b && c"));
  EXPECT_THAT(SplitConjuncts("((x > 0))"), ElementsAre("x > 0"));
  EXPECT_THAT(SplitConjuncts("f(a && b) & g[i & 1]"), ElementsAre("f(a && b)", "g[i & 1]"));
  EXPECT_THAT(SplitConjuncts("s == \"a && b\""), ElementsAre("s == \"a && b\""));
  EXPECT_THAT(SplitConjuncts("x &= y"), ElementsAre("x &= y"));
  EXPECT_THAT(SplitDisjuncts("a | b"), ElementsAre("a", "b"));
}

TEST(CompareConditions, ClauseExtensionAndRemoval) {
  EXPECT_EQ(CompareConditions("x > 0", "x > 0 && x < 10"), 1);
  EXPECT_EQ(CompareConditions("x > 0 && x < 10", "x > 0"), -1);
  EXPECT_EQ(CompareConditions("a || b", "a"), 1);
  EXPECT_EQ(CompareConditions("a", "a || b"), -1);
  EXPECT_EQ(CompareConditions("x > 0", "x >= 0"), 0);
  EXPECT_EQ(CompareConditions("a && b", "b && a"), 0);
  EXPECT_EQ(CompareConditions("(a) && (b)", "a && b && c"), 1);
}

TEST(ClassifyDiff, EqualSetsAreUnchanged) {
  std::vector<ContractRecord> v = {Rec(kPre, "x > 0"), Rec(kPost, "r != null", "P")};
  std::vector<ContractRecord> reordered = {v[1], v[0]};
  reordered[0].line = 99;  // Position does not matter.
  EXPECT_THAT(Diff(v, reordered), ElementsAre(kUnchanged));
  EXPECT_THAT(Diff({}, {}), ElementsAre(kUnchanged));
  // Whitespace is normalized before comparison.
  EXPECT_THAT(Diff({Rec(kPre, "x >  0")}, {Rec(kPre, "x > 0")}), ElementsAre(kUnchanged));
}

TEST(ClassifyDiff, AddedAndRemovedPreconditions) {
  EXPECT_THAT(Diff({}, {Rec(kPre, "x > 0")}), ElementsAre(C(kPre, EP::kPreStrengthened)));
  EXPECT_THAT(Diff({Rec(kPre, "x > 0")}, {}), ElementsAre(C(kPre, EP::kPreWeakened)));
  EXPECT_THAT(Diff({}, {Rec(kPost, "r")}), ElementsAre(C(kPost, EP::kPostStrengthened)));
  EXPECT_THAT(Diff({Rec(kPost, "r")}, {}), ElementsAre(C(kPost, EP::kPostWeakened)));
}

TEST(ClassifyDiff, ModifiedConditions) {
  EXPECT_THAT(Diff({Rec(kPre, "x > 0")}, {Rec(kPre, "x > 0 && y > 0")}),
              ElementsAre(C(kPre, EP::kPreStrengthened)));
  EXPECT_THAT(Diff({Rec(kPre, "x > 0 || y > 0")}, {Rec(kPre, "x > 0")}),
              ElementsAre(C(kPre, EP::kPreStrengthened)));
  EXPECT_THAT(Diff({Rec(kPre, "x > 0")}, {Rec(kPre, "x >= 1")}),
              ElementsAre(C(kPre, EP::kMinorChange)));
  // A different construct on the same slot is an add plus a remove.
  EXPECT_THAT(Diff({Rec(kPre, "x > 0", "A")}, {Rec(kPre, "x > 0", "B")}),
              ElementsAre(C(kPre, EP::kPreStrengthened), C(kPre, EP::kPreWeakened)));
}

TEST(ClassifyDiff, IndependentKindsAndUnclassified) {
  EXPECT_THAT(Diff({Rec(kPre, "a"), Rec(kPost, "r")}, {Rec(kPre, "a"), Rec(kPre, "b", "D")}),
              ElementsAre(C(kPre, EP::kPreStrengthened), C(kPost, EP::kPostWeakened)));
  EXPECT_THAT(Diff({Rec(ContractKind::kInvariant, "f")}, {}),
              ElementsAre(C(ContractKind::kInvariant, EP::kUnclassified)));
  EXPECT_THAT(Diff({}, {Rec(ContractKind::kUnclassified, "x")}),
              ElementsAre(C(ContractKind::kUnclassified, EP::kUnclassified)));
}

TEST(ClassifyDiff, ParameterSlotsAreSeparate) {
  EXPECT_THAT(Diff({Rec(kPre, "", "NonNull", 0)}, {Rec(kPre, "", "NonNull", 1)}),
              ElementsAre(C(kPre, EP::kPreStrengthened), C(kPre, EP::kPreWeakened)));
}

TEST(ClassifyDiff, SwappingVersionsMirrorsPatterns) {
  std::mt19937_64 rng(424242);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto [v1, v2] = contractscan::testing::RandomDiffPair(rng, trial);
    const std::vector<Classification> forward = Diff(v1, v2);
    const std::vector<Classification> backward = Diff(v2, v1);
    EXPECT_EQ(contractscan::testing::Mirrored(forward), backward) << "trial " << trial;
    EXPECT_THAT(Diff(v1, v1), ElementsAre(kUnchanged));
    EXPECT_THAT(Diff(v2, v2), ElementsAre(kUnchanged));
    EXPECT_FALSE(forward.empty());
    EXPECT_TRUE(std::is_sorted(forward.begin(), forward.end()));
    compared += forward != std::vector<Classification>{kUnchanged};
  }
  // The generator must actually produce changes.
  EXPECT_GT(compared, 150);
}

SnapshotReport Snapshot(std::string snapshot_id,
                        const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<SourceUnit> units;
  for (const auto& [path, text] : files) units.push_back(Parse(path, text));
  return contractscan::testing::SnapshotOf(units, "demo", std::move(snapshot_id));
}

constexpr char kV1[] = R"(package demo;
class Service {
  void a(int x) {
    if (x < 0) throw new IllegalArgumentException();
  }
  void b(String s) {
    if (s == null) throw new IllegalArgumentException();
  }
  void c(int y) {
    y++;
  }
}
)";

constexpr char kV2[] = R"(package demo;
class Service {
  void a(int x) {
    if (x < 0) throw new IllegalArgumentException();
  }
  void b(String s) {
    if (s == null || s.isEmpty()) throw new IllegalArgumentException();
  }
  void c(int y) {
    if (y > 100) throw new IllegalStateException();
    y++;
  }
}
)";

TEST(BuildDiffRecords, ThreeMethodScenario) {
  SnapshotReport v1 = Snapshot("v1", {{"demo/Service.java", kV1}});
  SnapshotReport v2 = Snapshot("v2", {{"demo/Service.java", kV2}});
  ASSERT_THAT(v1.records, SizeIs(2));
  ASSERT_THAT(v2.records, SizeIs(3));

  DiffBuild build = BuildDiffRecords(v1, v2);
  ASSERT_THAT(build.records, SizeIs(3));
  EXPECT_EQ(build.skipped_records, 0);
  EXPECT_THAT(build.collisions, IsEmpty());

  EXPECT_EQ(build.records[0].key.member_name, "a");
  EXPECT_THAT(build.records[0].classifications, ElementsAre(kUnchanged));
  EXPECT_EQ(build.records[1].key.member_name, "b");
  // Clause rules are textual: an added disjunct reads as weakening even in a
  // throw guard.
  EXPECT_THAT(build.records[1].classifications, ElementsAre(C(kPre, EP::kPreWeakened)));
  EXPECT_EQ(build.records[2].key.member_name, "c");
  EXPECT_THAT(build.records[2].before, IsEmpty());
  EXPECT_THAT(build.records[2].classifications, ElementsAre(C(kPre, EP::kPreStrengthened)));

  // Every contract occurrence lands in exactly one record.
  std::multiset<std::tuple<int, int, std::string>> seen;
  for (const DiffRecord& d : build.records) {
    for (const ContractRecord& r : d.before) seen.insert({1, r.line, r.construct_id});
    for (const ContractRecord& r : d.after) seen.insert({2, r.line, r.construct_id});
  }
  EXPECT_EQ(seen.size(), v1.records.size() + v2.records.size());
  for (const auto& entry : seen) EXPECT_EQ(seen.count(entry), 1u);

  PatternTally tally = Tally(build.records);
  EXPECT_EQ(tally.diff_records, 3);
  EXPECT_EQ(tally.counts[EP::kUnchanged], 1);
  EXPECT_EQ(tally.counts[EP::kPreStrengthened], 1);
  EXPECT_EQ(tally.critical_classifications, 1);
  EXPECT_EQ(tally.records_with_critical, 1);
}

TEST(BuildDiffRecords, OverloadsAreDistinctMembers) {
  SnapshotReport v1 = Snapshot("v1", {{"O.java", R"(class O {
  void f(int x) { if (x < 0) throw new IllegalArgumentException(); }
  void f(String s) { }
})"}});
  SnapshotReport v2 = Snapshot("v2", {{"O.java", R"(class O {
  void f(int x) { }
  void f(String s) { if (s == null) throw new IllegalArgumentException(); }
})"}});
  DiffBuild build = BuildDiffRecords(v1, v2);
  ASSERT_THAT(build.records, SizeIs(2));
  EXPECT_THAT(build.records[0].key.parameter_types, ElementsAre("String"));
  EXPECT_THAT(build.records[0].classifications, ElementsAre(C(kPre, EP::kPreStrengthened)));
  EXPECT_THAT(build.records[1].key.parameter_types, ElementsAre("int"));
  EXPECT_THAT(build.records[1].classifications, ElementsAre(C(kPre, EP::kPreWeakened)));
}

TEST(BuildDiffRecords, FallsBackToRecordKeysWithoutInventory) {
  SnapshotReport v1 = Snapshot("v1", {{"demo/Service.java", kV1}});
  SnapshotReport v2 = Snapshot("v2", {{"demo/Service.java", kV2}});
  v1.members.clear();
  v2.members.clear();
  DiffBuild build = BuildDiffRecords(v1, v2);
  EXPECT_THAT(build.records, SizeIs(3));
  EXPECT_THAT(build.records[0].key.parameter_types, IsEmpty());
}

TEST(MatchMethods, PresenceAndCollisions) {
  SnapshotReport v1 = Snapshot("v1", {{"M.java", R"(class M { void keep() {} void gone() {} })"}});
  SnapshotReport v2 = Snapshot("v2", {{"M.java", R"(class M { void keep() {} void added() {} })"},
                                      {"dup/M.java", R"(class M { void keep() {} })"}});
  MatchResult match = MatchMethods(v1, v2);
  // The type itself and its method `keep` are both declared twice in v2.
  ASSERT_THAT(match.collisions, SizeIs(2));
  EXPECT_EQ(match.collisions[0].kind, ArtifactKind::kType);
  EXPECT_EQ(match.collisions[0].member_name, "M");
  EXPECT_EQ(match.collisions[1].kind, ArtifactKind::kMethod);
  EXPECT_EQ(match.collisions[1].member_name, "keep");
  std::vector<std::pair<std::string, Presence>> got;
  for (const MethodMatch& m : match.matches) {
    if (m.key.kind == ArtifactKind::kMethod) got.push_back({m.key.member_name, m.presence});
  }
  EXPECT_THAT(got, ElementsAre(std::pair<std::string, Presence>{"added", Presence::kOnlyV2},
                               std::pair<std::string, Presence>{"gone", Presence::kOnlyV1}));
}

TEST(BuildDiffRecords, CollidingKeysAreSkipped) {
  SnapshotReport v1 = Snapshot("v1", {{"a/K.java", R"(class K {
  void f(int x) { if (x < 0) throw new IllegalArgumentException(); }
})"},
                                      {"b/K.java", R"(class K {
  void f(int x) { if (x > 9) throw new IllegalArgumentException(); }
})"}});
  SnapshotReport v2 = v1;
  DiffBuild build = BuildDiffRecords(v1, v2);
  EXPECT_THAT(build.records, IsEmpty());
  EXPECT_EQ(build.skipped_records, 4);
}

}  // namespace
}  // namespace contractscan
