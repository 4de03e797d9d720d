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

// Contract detectors. Each is a pure function of (unit, catalog).

#ifndef CONTRACTSCAN_DETECTORS_H_
#define CONTRACTSCAN_DETECTORS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contractscan/catalog.h"
#include "contractscan/contract_record.h"
#include "contractscan/source_model.h"

namespace contractscan {

// A throw whose exception is a cataloged CRE and which is the only statement
// of an if's then- or else-branch. The condition is kept as written.
std::vector<ContractRecord> DetectCre(const SourceUnit& unit, const Catalog& catalog);

// Calls to cataloged API methods, only in units importing an API package.
std::vector<ContractRecord> DetectApi(const SourceUnit& unit, const Catalog& catalog);

// Java assert statements; receiver-less Kotlin assertion calls whose name the
// unit neither declares nor imports from outside the standard library.
std::vector<ContractRecord> DetectAssertions(const SourceUnit& unit, const Catalog& catalog);

// Annotation uses that resolve to a cataloged annotation through an import
// or a qualified name.
std::vector<ContractRecord> DetectAnnotations(const SourceUnit& unit, const Catalog& catalog);

// `contract { returns(...) implies (...) }` blocks. Kotlin only.
std::vector<ContractRecord> DetectKotlinContracts(const SourceUnit& unit,
                                                  const Catalog& catalog);

// Union of the above, ordered by (line, constructId, parameterIndex).
std::vector<ContractRecord> DetectAll(const SourceUnit& unit, const Catalog& catalog);

// Qualified annotation name that `name_text` denotes in `unit`, if it names a
// cataloged annotation.
std::optional<std::string> ResolveAnnotation(const SourceUnit& unit, const Catalog& catalog,
                                             std::string_view name_text);

// True if `name` is unusable as an assertion in `unit` because the unit
// declares it or imports it from outside `kotlin.`.
bool IsAmbiguousAssertionName(const SourceUnit& unit, std::string_view name);

}  // namespace contractscan

#endif  // CONTRACTSCAN_DETECTORS_H_
