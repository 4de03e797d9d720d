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

#include "contractscan/source_model.h"

#include "absl/status/status.h"
#include "contractscan/text.h"
#include "extractors.h"
#include "fmt/format.h"
#include "ts_util.h"

namespace contractscan {

std::optional<Language> LanguageForPath(std::string_view path) {
  if (path.ends_with(".java")) return Language::kJava;
  if (path.ends_with(".kt") || path.ends_with(".kts")) return Language::kKotlin;
  return std::nullopt;
}

std::string_view LanguageName(Language language) {
  return language == Language::kJava ? "java" : "kotlin";
}

std::string_view VisibilityName(Visibility visibility) {
  switch (visibility) {
    case Visibility::kPublic: return "public";
    case Visibility::kProtected: return "protected";
    case Visibility::kInternal: return "internal";
    case Visibility::kPackagePrivate: return "package-private";
    case Visibility::kPrivate: return "private";
  }
  return "public";
}

std::string_view ImportDecl::BoundName() const {
  if (is_wildcard) return {};
  if (!alias.empty()) return alias;
  return LastSegment(qualified_name);
}

absl::StatusOr<SourceUnit> ParseFile(std::string_view path, std::string_view bytes) {
  const std::optional<Language> language = LanguageForPath(path);
  if (!language) {
    return absl::InvalidArgumentError(fmt::format("{}: not a Java or Kotlin file", path));
  }
  SourceUnit unit;
  unit.path = std::string(path);
  unit.language = *language;
  const std::string text = SanitizeUtf8(bytes);
  unit.line_count = CountPhysicalLines(bytes);
  if (text.empty()) return unit;

  ts::TreePtr tree =
      ts::Parse(*language == Language::kJava ? tree_sitter_java() : tree_sitter_kotlin(), text);
  if (tree == nullptr) {
    unit.status = {false, "parser produced no tree"};
    return unit;
  }
  TSNode root = ts_tree_root_node(tree.get());
  if (*language == Language::kJava) {
    internal::ExtractJava(root, text, unit);
  } else {
    internal::ExtractKotlin(root, text, unit);
  }
  if (ts_node_has_error(root)) {
    unit.status = {false, fmt::format("syntax error near line {}", ts::FirstErrorLine(root))};
  }
  return unit;
}

bool IsVisible(Visibility visibility) {
  return visibility == Visibility::kPublic || visibility == Visibility::kProtected ||
         visibility == Visibility::kInternal;
}

ArtifactCounts& ArtifactCounts::operator+=(const ArtifactCounts& other) {
  compilation_units += other.compilation_units;
  classes += other.classes;
  methods_all += other.methods_all;
  constructors_all += other.constructors_all;
  methods_visible += other.methods_visible;
  constructors_visible += other.constructors_visible;
  lines += other.lines;
  return *this;
}

namespace {

void CountMember(const MemberDecl& m, ArtifactCounts& counts) {
  if (m.is_initializer) return;
  const bool visible = IsVisible(m.visibility);
  if (m.kind == MemberKind::kMethod) {
    ++counts.methods_all;
    counts.methods_visible += visible;
  } else if (m.kind == MemberKind::kConstructor) {
    ++counts.constructors_all;
    counts.constructors_visible += visible;
  }
}

void VisitType(const TypeDecl& type, const std::function<void(const TypeDecl&)>& visit) {
  visit(type);
  for (const TypeDecl& nested : type.nested_types) VisitType(nested, visit);
}

}  // namespace

ArtifactCounts CountArtifacts(std::span<const SourceUnit> units) {
  ArtifactCounts counts;
  for (const SourceUnit& unit : units) {
    ++counts.compilation_units;
    counts.lines += unit.line_count;
    ForEachType(unit, [&](const TypeDecl& type) {
      ++counts.classes;
      for (const MemberDecl& m : type.members) CountMember(m, counts);
    });
    for (const MemberDecl& m : unit.top_level_members) CountMember(m, counts);
  }
  return counts;
}

void ForEachType(const SourceUnit& unit, const std::function<void(const TypeDecl&)>& visit) {
  for (const TypeDecl& type : unit.types) VisitType(type, visit);
}

void ForEachMember(const SourceUnit& unit,
                   const std::function<void(const MemberContext&)>& visit) {
  ForEachType(unit, [&](const TypeDecl& type) {
    for (const MemberDecl& m : type.members) visit({type.qualified_name, &type, m});
  });
  for (const MemberDecl& m : unit.top_level_members) visit({unit.facade_class, nullptr, m});
}

}  // namespace contractscan
