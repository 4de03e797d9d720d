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

#include "contractscan/classification.h"

namespace contractscan {

OccurrenceSite SiteOf(AnnotationSiteKind site) {
  switch (site) {
    case AnnotationSiteKind::kParameter: return OccurrenceSite::kParameter;
    case AnnotationSiteKind::kMethodOrReturn: return OccurrenceSite::kMethodOrReturn;
    case AnnotationSiteKind::kFieldOrProperty: return OccurrenceSite::kFieldOrProperty;
    case AnnotationSiteKind::kTypeDecl: return OccurrenceSite::kTypeDecl;
  }
  return OccurrenceSite::kStatement;
}

ContractKind Classify(const ConstructSpec& spec, OccurrenceSite site) {
  switch (spec.default_kind) {
    case DefaultKind::kPre: return ContractKind::kPre;
    case DefaultKind::kPost: return ContractKind::kPost;
    case DefaultKind::kInvariant: return ContractKind::kInvariant;
    case DefaultKind::kUnclassified: return ContractKind::kUnclassified;
    case DefaultKind::kSiteDependent: break;
  }
  switch (site) {
    case OccurrenceSite::kParameter: return ContractKind::kPre;
    case OccurrenceSite::kMethodOrReturn: return ContractKind::kPost;
    case OccurrenceSite::kFieldOrProperty:
    case OccurrenceSite::kTypeDecl:
      return ContractKind::kInvariant;
    case OccurrenceSite::kStatement: break;
  }
  return ContractKind::kUnclassified;
}

}  // namespace contractscan
