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

// Registry of contract constructs, loaded from tab-separated data files:
//
//   category <TAB> id <TAB> group <TAB> languages <TAB> matcher fields...
//
// Matcher fields per category:
//   CRE         exception simple name
//   API         class qualified name, method name
//   Assertion   form (statement|call), function or keyword name
//   Annotation  package prefix, simple name
//   Other       pattern tag
//
// `group` names the report row a construct rolls up into. `languages` is a
// comma list of java and kotlin. Blank lines and lines starting with '#' are
// ignored.

#ifndef CONTRACTSCAN_CATALOG_H_
#define CONTRACTSCAN_CATALOG_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "contractscan/contract_record.h"
#include "contractscan/source_model.h"

namespace contractscan {

enum class DefaultKind { kPre, kPost, kInvariant, kUnclassified, kSiteDependent };
enum class AssertionForm { kStatement, kCall };

struct ConstructSpec {
  std::string id;
  Category category = Category::kCre;
  std::string group;
  bool java = false;
  bool kotlin = false;
  std::string qualifier;  // API class or annotation package; else empty.
  std::string name;       // Exception, method, annotation, function or tag.
  AssertionForm form = AssertionForm::kCall;
  DefaultKind default_kind = DefaultKind::kPre;

  bool AppliesTo(Language language) const {
    return language == Language::kJava ? java : kotlin;
  }
  // (category, matcher) identity; unique within a catalog.
  std::string MatcherKey() const;
};

struct CatalogSource {
  std::string name;  // Used in diagnostics.
  std::string text;
};

class Catalog {
 public:
  // The shipped data files, embedded at build time.
  static absl::StatusOr<Catalog> LoadDefault();
  // Default catalog plus the files at `paths`.
  static absl::StatusOr<Catalog> LoadExtended(std::span<const std::string> paths);
  static absl::StatusOr<Catalog> FromSources(std::span<const CatalogSource> sources);

  const std::vector<ConstructSpec>& specs() const { return specs_; }
  size_t CountBy(Category category) const;
  const ConstructSpec* FindById(std::string_view id) const;

  const ConstructSpec* FindCre(std::string_view exception_simple_name) const;

  bool IsApiClass(std::string_view class_qualified_name) const;
  // Packages holding cataloged API classes.
  const std::set<std::string>& api_packages() const { return api_packages_; }
  // Exact (class, method) entry, else an entry with the same method name on
  // another class of the same group.
  const ConstructSpec* FindApi(std::string_view class_qualified_name,
                               std::string_view method) const;

  // True if `package_name` is, or lies under, an annotation package.
  bool IsAnnotationPackage(std::string_view package_name) const;
  // Resolves a fully qualified annotation name by longest package prefix.
  const ConstructSpec* FindAnnotation(std::string_view qualified_name) const;

  const ConstructSpec* FindAssertion(AssertionForm form, std::string_view name,
                                     Language language) const;
  // Names of receiver-less Kotlin assertion functions.
  std::vector<std::string> KotlinAssertionNames() const;

  const ConstructSpec* FindOther(std::string_view pattern_tag) const;

  // Stable 64-bit FNV-1a digest of the catalog contents, as hex.
  std::string Hash() const;

 private:
  absl::Status Add(ConstructSpec spec, std::string_view where);
  absl::Status AddSource(const CatalogSource& source);

  std::vector<ConstructSpec> specs_;
  std::map<std::string, size_t, std::less<>> by_id_;
  std::map<std::string, std::string, std::less<>> where_by_id_;
  std::map<std::string, size_t, std::less<>> by_matcher_;
  std::set<std::string> api_packages_;
  std::set<std::string, std::less<>> api_classes_;
  std::set<std::string, std::less<>> annotation_packages_;
};

}  // namespace contractscan

#endif  // CONTRACTSCAN_CATALOG_H_
