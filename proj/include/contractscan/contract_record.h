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

#ifndef CONTRACTSCAN_CONTRACT_RECORD_H_
#define CONTRACTSCAN_CONTRACT_RECORD_H_

#include <optional>
#include <string>
#include <string_view>

namespace contractscan {

enum class Category { kCre, kApi, kAssertion, kAnnotation, kOther };
inline constexpr Category kAllCategories[] = {Category::kCre, Category::kApi,
                                              Category::kAssertion, Category::kAnnotation,
                                              Category::kOther};

enum class ContractKind { kPre, kPost, kInvariant, kUnclassified };
inline constexpr ContractKind kAllKinds[] = {ContractKind::kPre, ContractKind::kPost,
                                             ContractKind::kInvariant,
                                             ContractKind::kUnclassified};

// kType is used for annotations on a type declaration itself.
enum class ArtifactKind { kMethod, kConstructor, kFieldOrProperty, kType };

std::string_view CategoryName(Category category);  // "CRE", "API", ...
std::optional<Category> ParseCategory(std::string_view name);
std::string_view KindName(ContractKind kind);  // "Pre", "Post", ...
std::optional<ContractKind> ParseKind(std::string_view name);
std::string_view ArtifactKindName(ArtifactKind kind);
std::optional<ArtifactKind> ParseArtifactKind(std::string_view name);

struct ContractRecord {
  std::string file_path;
  std::string construct_id;
  Category category = Category::kCre;
  ContractKind kind = ContractKind::kPre;
  std::string condition_text;
  std::string artifact_name;
  ArtifactKind artifact_kind = ArtifactKind::kMethod;
  std::string owner_class;
  std::optional<int> parameter_index;
  int line = 0;

  friend bool operator==(const ContractRecord&, const ContractRecord&) = default;
};

// Snapshot order: (filePath, line, constructId, parameterIndex).
bool RecordLess(const ContractRecord& a, const ContractRecord& b);

}  // namespace contractscan

#endif  // CONTRACTSCAN_CONTRACT_RECORD_H_
