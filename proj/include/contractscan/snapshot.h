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

// One scanned project version: its contract records plus the member
// inventory that lets records be compared across versions and hierarchies
// without the sources.

#ifndef CONTRACTSCAN_SNAPSHOT_H_
#define CONTRACTSCAN_SNAPSHOT_H_

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contractscan/contract_record.h"
#include "contractscan/source_model.h"

namespace contractscan {

inline constexpr std::string_view kToolName = "contractscan";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Identity of a member across versions and along a hierarchy. Extension
// receivers appear as a leading "this:<Type>" parameter.
struct MemberKey {
  std::string owner_class;
  std::string member_name;
  std::vector<std::string> parameter_types;
  ArtifactKind kind = ArtifactKind::kMethod;

  friend auto operator<=>(const MemberKey&, const MemberKey&) = default;
  friend bool operator==(const MemberKey&, const MemberKey&) = default;
};

// "owner#name(T1,T2)", with a kind suffix for non-methods.
std::string ToString(const MemberKey& key);

struct MemberInfo {
  MemberKey key;
  std::string file_path;
  int line = 0;
  int end_line = 0;
};

MemberKey KeyOf(std::string_view owner_class, const MemberDecl& member);
MemberKey KeyOf(const TypeDecl& type);

// Members and types of `units`, in file then declaration order.
std::vector<MemberInfo> BuildMemberInventory(std::span<const SourceUnit> units);

struct ToolInfo {
  std::string name{kToolName};
  std::string version{kToolVersion};
  std::string catalog_hash;
};

struct SnapshotReport {
  std::string project_id;
  std::string snapshot_id;
  ToolInfo tool;
  ArtifactCounts artifact_counts;
  std::map<Language, ArtifactCounts> counts_by_language;
  std::vector<ContractRecord> records;  // Sorted by RecordLess.
  std::vector<MemberInfo> members;
};

// For each record, the index in `report.members` of the member it belongs
// to: same file, owner, name and kind, innermost span containing the record
// when several overloads qualify.
std::vector<std::optional<size_t>> LinkRecords(const SnapshotReport& report);

}  // namespace contractscan

#endif  // CONTRACTSCAN_SNAPSHOT_H_
