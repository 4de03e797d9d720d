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

// Diff records between two contract sets of one member, and their
// classification into evolution patterns. Used for version pairs here and
// for overrides by the inheritance analysis.

#ifndef CONTRACTSCAN_EVOLUTION_H_
#define CONTRACTSCAN_EVOLUTION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "contractscan/snapshot.h"

namespace contractscan {

enum class EvolutionPattern {
  kUnchanged,
  kMinorChange,
  kPreStrengthened,
  kPreWeakened,
  kPostStrengthened,
  kPostWeakened,
  kUnclassified,
};
inline constexpr EvolutionPattern kAllPatterns[] = {
    EvolutionPattern::kUnchanged,        EvolutionPattern::kMinorChange,
    EvolutionPattern::kPreStrengthened,  EvolutionPattern::kPreWeakened,
    EvolutionPattern::kPostStrengthened, EvolutionPattern::kPostWeakened,
    EvolutionPattern::kUnclassified,
};

std::string_view PatternName(EvolutionPattern pattern);
// PreStrengthened and PostWeakened can break existing clients.
bool IsCritical(EvolutionPattern pattern);
// Strengthened <-> Weakened for the same kind; other patterns map to themselves.
EvolutionPattern Mirror(EvolutionPattern pattern);

struct Classification {
  // Absent only for Unchanged, which covers the whole record.
  std::optional<ContractKind> kind;
  EvolutionPattern pattern = EvolutionPattern::kUnchanged;

  friend auto operator<=>(const Classification&, const Classification&) = default;
  friend bool operator==(const Classification&, const Classification&) = default;
};

struct DiffRecord {
  MemberKey key;
  std::vector<ContractRecord> before;
  std::vector<ContractRecord> after;
  std::vector<Classification> classifications;
};

// Classifies the change from `before` to `after`. Pre and Post are judged
// independently; each (kind, pattern) appears at most once and the result
// is sorted. Equal multisets of (construct, parameter, condition) per kind
// yield exactly {Unchanged}.
std::vector<Classification> ClassifyDiff(std::span<const ContractRecord> before,
                                         std::span<const ContractRecord> after);

// How `after` relates to `before` when both are boolean conditions:
// +1 stronger, -1 weaker, 0 unrelated. Only top-level clause extension or
// removal is recognized: extra `&&`/`&` conjuncts or fewer `||`/`|`
// disjuncts are stronger.
int CompareConditions(std::string_view before, std::string_view after);

// Top-level operands of `||`/`|`, or of `&&`/`&` when no disjunction is at
// the top level. Parentheses, brackets, braces and literals are opaque.
std::vector<std::string> SplitDisjuncts(std::string_view condition);
std::vector<std::string> SplitConjuncts(std::string_view condition);

enum class Presence { kBoth, kOnlyV1, kOnlyV2 };

struct MethodMatch {
  MemberKey key;
  Presence presence = Presence::kBoth;
};

struct MatchResult {
  std::vector<MethodMatch> matches;  // Sorted by key.
  // Keys declared twice in one snapshot; excluded from matching.
  std::vector<MemberKey> collisions;
};

MatchResult MatchMethods(const SnapshotReport& v1, const SnapshotReport& v2);

struct DiffBuild {
  std::vector<DiffRecord> records;  // Sorted by key, classified.
  std::vector<MemberKey> collisions;
  // Records whose member could not be identified or whose key collides.
  int64_t skipped_records = 0;
};

// Walks every contract of v1 and then of v2, each visited at most once. A v1
// contract opens a record holding both versions' contracts of its member; a
// v2 contract not yet visited opens one with an empty before. Snapshots
// without a member inventory key records by (owner, name, kind) only.
DiffBuild BuildDiffRecords(const SnapshotReport& v1, const SnapshotReport& v2);

struct PatternTally {
  std::map<EvolutionPattern, int64_t> counts;  // Every pattern present.
  int64_t critical_classifications = 0;
  int64_t records_with_critical = 0;
  int64_t diff_records = 0;
};

PatternTally Tally(std::span<const DiffRecord> records);

}  // namespace contractscan

#endif  // CONTRACTSCAN_EVOLUTION_H_
