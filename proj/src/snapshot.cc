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

#include "contractscan/snapshot.h"

#include <tuple>

#include "fmt/format.h"


namespace contractscan {

std::string ToString(const MemberKey& key) {
  std::string out = fmt::format("{}#{}", key.owner_class, key.member_name);
  switch (key.kind) {
    case ArtifactKind::kMethod:
    case ArtifactKind::kConstructor:
      out += fmt::format("({})", fmt::join(key.parameter_types, ","));
      break;
    case ArtifactKind::kFieldOrProperty:
      out += " [field]";
      break;
    case ArtifactKind::kType:
      out += " [type]";
      break;
  }
  return out;
}

MemberKey KeyOf(std::string_view owner_class, const MemberDecl& member) {
  MemberKey key;
  key.owner_class = std::string(owner_class);
  key.member_name = member.name;
  switch (member.kind) {
    case MemberKind::kMethod: key.kind = ArtifactKind::kMethod; break;
    case MemberKind::kConstructor: key.kind = ArtifactKind::kConstructor; break;
    case MemberKind::kFieldOrProperty: key.kind = ArtifactKind::kFieldOrProperty; break;
  }
  if (!member.receiver_type_text.empty()) {
    key.parameter_types.push_back(fmt::format("this:{}", member.receiver_type_text));
  }
  if (key.kind != ArtifactKind::kFieldOrProperty) {
    for (const Parameter& p : member.parameters) key.parameter_types.push_back(p.type_text);
  }
  return key;
}

MemberKey KeyOf(const TypeDecl& type) {
  MemberKey key;
  key.owner_class = type.qualified_name;
  key.member_name = type.name;
  key.kind = ArtifactKind::kType;
  return key;
}

std::vector<MemberInfo> BuildMemberInventory(std::span<const SourceUnit> units) {
  std::vector<MemberInfo> out;
  for (const SourceUnit& unit : units) {
    ForEachType(unit, [&](const TypeDecl& type) {
      out.push_back({KeyOf(type), unit.path, type.line, type.end_line});
    });
    ForEachMember(unit, [&](const MemberContext& ctx) {
      out.push_back({KeyOf(ctx.owner_class, ctx.member), unit.path, ctx.member.line,
                     ctx.member.end_line});
    });
  }
  return out;
}

std::vector<std::optional<size_t>> LinkRecords(const SnapshotReport& report) {
  using Slot = std::tuple<std::string_view, std::string_view, std::string_view, ArtifactKind>;
  std::map<Slot, std::vector<size_t>> by_slot;
  for (size_t i = 0; i < report.members.size(); ++i) {
    const MemberInfo& m = report.members[i];
    by_slot[{m.file_path, m.key.owner_class, m.key.member_name, m.key.kind}].push_back(i);
  }
  std::vector<std::optional<size_t>> out;
  out.reserve(report.records.size());
  for (const ContractRecord& r : report.records) {
    auto it = by_slot.find({r.file_path, r.owner_class, r.artifact_name, r.artifact_kind});
    if (it == by_slot.end()) {
      out.push_back(std::nullopt);
      continue;
    }
    const std::vector<size_t>& candidates = it->second;
    if (candidates.size() == 1) {
      out.push_back(candidates.front());
      continue;
    }
    std::optional<size_t> best;
    for (size_t idx : candidates) {
      const MemberInfo& m = report.members[idx];
      if (r.line < m.line || r.line > m.end_line) continue;
      if (!best || m.end_line - m.line < report.members[*best].end_line -
                                             report.members[*best].line) {
        best = idx;
      }
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace contractscan
