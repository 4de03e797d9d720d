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

// Language-neutral structural view of Java and Kotlin compilation units.
// Everything here is a plain value: parse results keep no reference to the
// concrete syntax tree or to the source buffer.

#ifndef CONTRACTSCAN_SOURCE_MODEL_H_
#define CONTRACTSCAN_SOURCE_MODEL_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace contractscan {

enum class Language { kJava, kKotlin };

// ".java" -> Java; ".kt" and ".kts" -> Kotlin.
std::optional<Language> LanguageForPath(std::string_view path);
std::string_view LanguageName(Language language);

enum class Visibility { kPublic, kProtected, kInternal, kPackagePrivate, kPrivate };
std::string_view VisibilityName(Visibility visibility);

enum class MemberKind { kMethod, kConstructor, kFieldOrProperty };

struct ImportDecl {
  std::string qualified_name;  // For wildcards, the package or class.
  bool is_wildcard = false;
  bool is_static = false;  // Java `import static`.
  std::string alias;       // Kotlin `import a.B as C`.

  // Simple name this import introduces; empty for wildcards.
  std::string_view BoundName() const;
};

enum class AnnotationSiteKind { kParameter, kMethodOrReturn, kFieldOrProperty, kTypeDecl };

struct AnnotationUse {
  std::string name_text;       // As written, without '@' or use-site target.
  std::string arguments_text;  // Normalized "(...)" or empty.
  std::string use_site_target;  // Kotlin "get", "param", ...
  AnnotationSiteKind site = AnnotationSiteKind::kMethodOrReturn;
  int parameter_index = -1;  // >= 0 iff site is kParameter.
  int line = 0;
};

struct Parameter {
  std::string name;
  std::string type_text;  // Normalized.
  std::vector<AnnotationUse> annotations;
};

struct ThrowStatement {
  std::string exception_type;  // Constructor type text; empty when not `new T(...)`.
  std::vector<std::string> arguments;
  int line = 0;
};

struct Branch {
  int statement_count = 0;
  std::optional<ThrowStatement> sole_throw;  // Set iff the branch is one throw.
};

struct IfStatement {
  std::string condition;  // Without the enclosing parentheses.
  Branch then_branch;
  std::optional<Branch> else_branch;
  int line = 0;
};

struct CallExpression {
  std::string callee;    // Simple name.
  std::string receiver;  // Empty for receiver-less calls.
  std::vector<std::string> arguments;
  bool has_trailing_lambda = false;
  int line = 0;
};

struct AssertStatement {
  std::string condition;
  int line = 0;
};

// `returns(...) implies (...)` inside a Kotlin `contract { }` block.
struct ContractEffect {
  std::string returns_text;
  std::string implies_text;
};

struct ContractBlock {
  std::vector<ContractEffect> effects;
  int line = 0;
};

// Statement facade over one member body. Each list is in source order and
// includes constructs nested in lambdas and local or anonymous classes.
struct StatementTree {
  std::vector<IfStatement> ifs;
  std::vector<ThrowStatement> throws;
  std::vector<CallExpression> calls;
  std::vector<AssertStatement> asserts;
  std::vector<ContractBlock> contract_blocks;
};

struct MemberDecl {
  MemberKind kind = MemberKind::kMethod;
  std::string name;
  Visibility visibility = Visibility::kPublic;
  std::vector<Parameter> parameters;
  std::string return_type_text;
  std::string receiver_type_text;  // Kotlin extension receiver.
  std::vector<AnnotationUse> annotations;  // Member-level only.
  std::optional<StatementTree> body;
  bool is_override = false;
  bool is_static = false;
  // Synthetic `<init>`/`<clinit>` member holding initializer blocks. Not a
  // declaration: excluded from artifact counts.
  bool is_initializer = false;
  int line = 0;
  int end_line = 0;
};

enum class TypeKind { kClass, kInterface, kEnum, kRecord, kAnnotation, kObject };

struct TypeDecl {
  std::string name;
  std::string qualified_name;
  TypeKind kind = TypeKind::kClass;
  std::vector<std::string> super_types;
  std::vector<AnnotationUse> annotations;
  std::vector<MemberDecl> members;
  std::vector<TypeDecl> nested_types;
  int line = 0;
  int end_line = 0;
};

struct ParseStatus {
  bool ok = true;
  std::string detail;  // Set when !ok.
};

struct SourceUnit {
  std::string path;
  Language language = Language::kJava;
  std::string package_name;
  std::vector<ImportDecl> imports;
  std::vector<TypeDecl> types;
  // Kotlin top-level functions and properties, owned by the file facade
  // class `<package>.<FileStem>Kt`.
  std::string facade_class;
  std::vector<MemberDecl> top_level_members;
  // Every function name declared anywhere in the file, locals included.
  std::vector<std::string> declared_function_names;
  ParseStatus status;
  int line_count = 0;
};

// Parses one file. Syntax errors yield a unit with !status.ok holding every
// declaration that could be recovered. Fails only for paths that are neither
// Java nor Kotlin.
absl::StatusOr<SourceUnit> ParseFile(std::string_view path, std::string_view bytes);

struct ArtifactCounts {
  int64_t compilation_units = 0;
  int64_t classes = 0;
  int64_t methods_all = 0;
  int64_t constructors_all = 0;
  int64_t methods_visible = 0;
  int64_t constructors_visible = 0;
  int64_t lines = 0;

  double Kloc() const { return static_cast<double>(lines) / 1000.0; }
  ArtifactCounts& operator+=(const ArtifactCounts& other);
  friend bool operator==(const ArtifactCounts&, const ArtifactCounts&) = default;
};

// Classes include interfaces, enums, records, annotation types, objects and
// nested types. Kotlin file facades are not classes.
ArtifactCounts CountArtifacts(std::span<const SourceUnit> units);

bool IsVisible(Visibility visibility);

// A member together with the class that owns it.
struct MemberContext {
  std::string_view owner_class;
  const TypeDecl* type = nullptr;  // Null for Kotlin top-level members.
  const MemberDecl& member;
};

// Visits members in declaration order, outer types before nested ones, then
// Kotlin top-level members.
void ForEachMember(const SourceUnit& unit,
                   const std::function<void(const MemberContext&)>& visit);
void ForEachType(const SourceUnit& unit,
                 const std::function<void(const TypeDecl&)>& visit);

}  // namespace contractscan

#endif  // CONTRACTSCAN_SOURCE_MODEL_H_
