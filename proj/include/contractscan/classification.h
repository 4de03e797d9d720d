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

#ifndef CONTRACTSCAN_CLASSIFICATION_H_
#define CONTRACTSCAN_CLASSIFICATION_H_

#include "contractscan/catalog.h"
#include "contractscan/contract_record.h"

namespace contractscan {

enum class OccurrenceSite { kStatement, kParameter, kMethodOrReturn, kFieldOrProperty, kTypeDecl };

OccurrenceSite SiteOf(AnnotationSiteKind site);

// Total over (spec, site). Annotations: parameter -> Pre, method or return
// -> Post, field, property or type -> Invariant. A site-dependent spec seen
// at a statement site has no site rule and stays Unclassified.
ContractKind Classify(const ConstructSpec& spec, OccurrenceSite site);

}  // namespace contractscan

#endif  // CONTRACTSCAN_CLASSIFICATION_H_
