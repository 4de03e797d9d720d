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

#include "contractscan/contract_record.h"

#include <tuple>

namespace contractscan {

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kCre: return "CRE";
    case Category::kApi: return "API";
    case Category::kAssertion: return "Assertion";
    case Category::kAnnotation: return "Annotation";
    case Category::kOther: return "Other";
  }
  return "Other";
}

std::optional<Category> ParseCategory(std::string_view name) {
  for (Category c : kAllCategories) {
    if (CategoryName(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view KindName(ContractKind kind) {
  switch (kind) {
    case ContractKind::kPre: return "Pre";
    case ContractKind::kPost: return "Post";
    case ContractKind::kInvariant: return "Invariant";
    case ContractKind::kUnclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::optional<ContractKind> ParseKind(std::string_view name) {
  for (ContractKind k : kAllKinds) {
    if (KindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view ArtifactKindName(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::kMethod: return "Method";
    case ArtifactKind::kConstructor: return "Constructor";
    case ArtifactKind::kFieldOrProperty: return "FieldOrProperty";
    case ArtifactKind::kType: return "Type";
  }
  return "Method";
}

std::optional<ArtifactKind> ParseArtifactKind(std::string_view name) {
  for (ArtifactKind k : {ArtifactKind::kMethod, ArtifactKind::kConstructor,
                         ArtifactKind::kFieldOrProperty, ArtifactKind::kType}) {
    if (ArtifactKindName(k) == name) return k;
  }
  return std::nullopt;
}

bool RecordLess(const ContractRecord& a, const ContractRecord& b) {
  const int pa = a.parameter_index.value_or(-1);
  const int pb = b.parameter_index.value_or(-1);
  return std::tie(a.file_path, a.line, a.construct_id, pa) <
         std::tie(b.file_path, b.line, b.construct_id, pb);
}

}  // namespace contractscan
