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

#include "contractscan/catalog.h"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "contractscan/text.h"
#include "fmt/format.h"

namespace contractscan {

// Generated from data/catalog/*.tsv.
extern const CatalogSource kDefaultCatalogSources[];
extern const size_t kDefaultCatalogSourceCount;

std::string ConstructSpec::MatcherKey() const {
  std::string key = fmt::format("{}|{}|{}", CategoryName(category), qualifier, name);
  if (category == Category::kAssertion) {
    key += fmt::format("{}{}{}", form == AssertionForm::kStatement ? "|statement" : "|call", java ? "|java" : "", kotlin ? "|kotlin" : "");
  }
  return key;
}

namespace {

DefaultKind DefaultKindFor(Category category) {
  switch (category) {
    case Category::kCre:
    case Category::kApi:
      return DefaultKind::kPre;
    case Category::kAssertion:
    case Category::kOther:
      return DefaultKind::kUnclassified;
    case Category::kAnnotation:
      return DefaultKind::kSiteDependent;
  }
  return DefaultKind::kUnclassified;
}

size_t MatcherFieldCount(Category category) {
  switch (category) {
    case Category::kCre:
    case Category::kOther:
      return 1;
    default:
      return 2;
  }
}

bool IsIdentifierPath(std::string_view text) {
  if (text.empty() || text.front() == '.' || text.back() == '.') return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
           c == '$';
  });
}

bool UnderPrefix(std::string_view package_name, std::string_view prefix) {
  if (package_name == prefix) return true;
  return package_name.size() > prefix.size() && package_name.starts_with(prefix) &&
         package_name[prefix.size()] == '.';
}

}  // namespace

absl::Status Catalog::AddSource(const CatalogSource& source) {
  int line_number = 0;
  for (std::string_view line : Split(source.text, '\n')) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view trimmed = TrimWhitespace(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const std::string where = fmt::format("{}:{}", source.name, line_number);
    std::vector<std::string_view> fields = Split(line, '\t');
    for (std::string_view& f : fields) f = TrimWhitespace(f);
    if (fields.size() < 5) {
      return absl::InvalidArgumentError(
          fmt::format("{}: expected at least 5 tab-separated fields, found {}", where, fields.size()));
    }
    ConstructSpec spec;
    const std::optional<Category> category = ParseCategory(fields[0]);
    if (!category) {
      return absl::InvalidArgumentError(
          fmt::format("{}: unknown category '{}'", where, fields[0]));
    }
    spec.category = *category;
    spec.id = std::string(fields[1]);
    spec.group = std::string(fields[2]);
    if (spec.id.empty() || spec.group.empty()) {
      return absl::InvalidArgumentError(fmt::format("{}: empty id or group", where));
    }
    for (std::string_view lang : Split(fields[3], ',', /*skip_empty=*/true)) {
      lang = TrimWhitespace(lang);
      if (lang == "java") {
        spec.java = true;
      } else if (lang == "kotlin") {
        spec.kotlin = true;
      } else {
        return absl::InvalidArgumentError(fmt::format("{}: unknown language '{}'", where, lang));
      }
    }
    if (!spec.java && !spec.kotlin) {
      return absl::InvalidArgumentError(fmt::format("{}: no languages listed", where));
    }
    const size_t expected = 4 + MatcherFieldCount(spec.category);
    if (fields.size() != expected) {
      return absl::InvalidArgumentError(fmt::format("{}: {} entries take {} fields, found {}", where, CategoryName(spec.category), expected, fields.size()));
    }
    switch (spec.category) {
      case Category::kCre:
      case Category::kOther:
        spec.name = std::string(fields[4]);
        break;
      case Category::kApi:
      case Category::kAnnotation:
        spec.qualifier = std::string(fields[4]);
        spec.name = std::string(fields[5]);
        if (!IsIdentifierPath(spec.qualifier)) {
          return absl::InvalidArgumentError(
              fmt::format("{}: malformed qualified name '{}'", where, spec.qualifier));
        }
        break;
      case Category::kAssertion:
        if (fields[4] == "statement") {
          spec.form = AssertionForm::kStatement;
        } else if (fields[4] == "call") {
          spec.form = AssertionForm::kCall;
        } else {
          return absl::InvalidArgumentError(
              fmt::format("{}: assertion form must be statement or call", where));
        }
        spec.name = std::string(fields[5]);
        break;
    }
    if (!IsIdentifierPath(spec.name) && spec.category != Category::kOther) {
      return absl::InvalidArgumentError(
          fmt::format("{}: malformed name '{}'", where, spec.name));
    }
    spec.default_kind = DefaultKindFor(spec.category);
    if (absl::Status s = Add(std::move(spec), where); !s.ok()) return s;
  }
  return absl::OkStatus();
}

absl::Status Catalog::Add(ConstructSpec spec, std::string_view where) {
  if (auto it = where_by_id_.find(spec.id); it != where_by_id_.end()) {
    return absl::AlreadyExistsError(fmt::format("{}: duplicate construct id '{}' (first defined at {})", where, spec.id, it->second));
  }
  const std::string matcher = spec.MatcherKey();
  if (auto it = by_matcher_.find(matcher); it != by_matcher_.end()) {
    return absl::AlreadyExistsError(fmt::format("{}: construct '{}' matches the same code as '{}'", where, spec.id, specs_[it->second].id));
  }
  if (spec.category == Category::kApi) {
    api_classes_.insert(spec.qualifier);
    api_packages_.insert(std::string(DropLastSegment(spec.qualifier)));
  } else if (spec.category == Category::kAnnotation) {
    annotation_packages_.insert(spec.qualifier);
  }
  where_by_id_.emplace(spec.id, std::string(where));
  by_id_.emplace(spec.id, specs_.size());
  by_matcher_.emplace(matcher, specs_.size());
  specs_.push_back(std::move(spec));
  return absl::OkStatus();
}

absl::StatusOr<Catalog> Catalog::FromSources(std::span<const CatalogSource> sources) {
  Catalog catalog;
  for (const CatalogSource& source : sources) {
    if (absl::Status s = catalog.AddSource(source); !s.ok()) return s;
  }
  return catalog;
}

absl::StatusOr<Catalog> Catalog::LoadDefault() {
  return FromSources(std::span(kDefaultCatalogSources, kDefaultCatalogSourceCount));
}

absl::StatusOr<Catalog> Catalog::LoadExtended(std::span<const std::string> paths) {
  std::vector<CatalogSource> sources(kDefaultCatalogSources,
                                     kDefaultCatalogSources + kDefaultCatalogSourceCount);
  for (const std::string& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return absl::NotFoundError(fmt::format("{}: cannot read catalog file", path));
    std::ostringstream text;
    text << in.rdbuf();
    sources.push_back({path, text.str()});
  }
  return FromSources(sources);
}

size_t Catalog::CountBy(Category category) const {
  return std::count_if(specs_.begin(), specs_.end(),
                       [&](const ConstructSpec& s) { return s.category == category; });
}

const ConstructSpec* Catalog::FindById(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &specs_[it->second];
}

const ConstructSpec* Catalog::FindCre(std::string_view exception_simple_name) const {
  auto it = by_matcher_.find(fmt::format("CRE||{}", exception_simple_name));
  return it == by_matcher_.end() ? nullptr : &specs_[it->second];
}

bool Catalog::IsApiClass(std::string_view class_qualified_name) const {
  return api_classes_.contains(class_qualified_name);
}

const ConstructSpec* Catalog::FindApi(std::string_view class_qualified_name,
                                      std::string_view method) const {
  if (!IsApiClass(class_qualified_name)) return nullptr;
  auto it = by_matcher_.find(fmt::format("API|{}|{}", class_qualified_name, method));
  if (it != by_matcher_.end()) return &specs_[it->second];
  std::set<std::string_view> groups;
  for (const ConstructSpec& s : specs_) {
    if (s.category == Category::kApi && s.qualifier == class_qualified_name) {
      groups.insert(s.group);
    }
  }
  for (const ConstructSpec& s : specs_) {
    if (s.category == Category::kApi && s.name == method && groups.contains(s.group)) {
      return &s;
    }
  }
  return nullptr;
}

bool Catalog::IsAnnotationPackage(std::string_view package_name) const {
  for (const std::string& prefix : annotation_packages_) {
    if (UnderPrefix(package_name, prefix)) return true;
  }
  return false;
}

const ConstructSpec* Catalog::FindAnnotation(std::string_view qualified_name) const {
  const std::string_view package_name = DropLastSegment(qualified_name);
  const std::string_view name = LastSegment(qualified_name);
  const ConstructSpec* best = nullptr;
  for (const ConstructSpec& s : specs_) {
    if (s.category != Category::kAnnotation || s.name != name) continue;
    if (!UnderPrefix(package_name, s.qualifier)) continue;
    if (best == nullptr || s.qualifier.size() > best->qualifier.size()) best = &s;
  }
  return best;
}

const ConstructSpec* Catalog::FindAssertion(AssertionForm form, std::string_view name,
                                            Language language) const {
  for (const ConstructSpec& s : specs_) {
    if (s.category == Category::kAssertion && s.form == form && s.name == name &&
        s.AppliesTo(language)) {
      return &s;
    }
  }
  return nullptr;
}

std::vector<std::string> Catalog::KotlinAssertionNames() const {
  std::vector<std::string> names;
  for (const ConstructSpec& s : specs_) {
    if (s.category == Category::kAssertion && s.form == AssertionForm::kCall && s.kotlin) {
      names.push_back(s.name);
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

const ConstructSpec* Catalog::FindOther(std::string_view pattern_tag) const {
  auto it = by_matcher_.find(fmt::format("Other||{}", pattern_tag));
  return it == by_matcher_.end() ? nullptr : &specs_[it->second];
}

std::string Catalog::Hash() const {
  std::vector<const ConstructSpec*> sorted;
  for (const ConstructSpec& s : specs_) sorted.push_back(&s);
  std::sort(sorted.begin(), sorted.end(),
            [](const ConstructSpec* a, const ConstructSpec* b) { return a->id < b->id; });
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::string_view text) {
    for (unsigned char c : text) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  for (const ConstructSpec* s : sorted) {
    mix(s->id);
    mix(s->group);
    mix(s->MatcherKey());
  }
  return fmt::format("{:016x}", h);
}

}  // namespace contractscan
