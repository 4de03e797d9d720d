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

// Class hierarchies inside one snapshot and the contract diffs between
// overriding methods and the declarations they override.

#ifndef CONTRACTSCAN_INHERITANCE_H_
#define CONTRACTSCAN_INHERITANCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contractscan/evolution.h"
#include "contractscan/snapshot.h"
#include "contractscan/source_model.h"

namespace contractscan {

struct HierarchyEdge {
  std::string sub_class;
  std::string super_type_text;  // As written, type arguments included.
  // Qualified name of a type declared in the snapshot.
  std::optional<std::string> resolved_super;
  // Files declaring the two ends; several files may declare one name.
  std::string sub_file;
  std::string super_file;
};

// One edge per written supertype, in file and declaration order. A simple
// name resolves through a single-type import, then the current package,
// then the types of the current file, then on-demand imports. When several
// files declare the resolved name, the one sharing the longest directory
// prefix with the subclass wins.
std::vector<HierarchyEdge> ResolveHierarchy(std::span<const SourceUnit> units);

struct OverridePair {
  DiffRecord diff;  // before: overridden method, after: override.
  MemberKey super_key;
  std::string sub_file;
  int sub_line = 0;
  std::string super_file;
  int super_line = 0;
  // PreStrengthened or PostWeakened among the classifications.
  bool violation = false;
};

struct LspReport {
  std::vector<OverridePair> pairs;  // Only pairs with contracts on either side.
  int64_t resolved_edges = 0;
  int64_t unresolved_edges = 0;
  int64_t override_pairs = 0;  // Including pairs without contracts.
};

// Pairs every non-static, non-private method with its nearest overridden
// declaration, found breadth-first over resolved supertypes. `report` must
// hold the records of `units`.
LspReport LspDiffRecords(std::span<const SourceUnit> units, const SnapshotReport& report);

}  // namespace contractscan

#endif  // CONTRACTSCAN_INHERITANCE_H_
