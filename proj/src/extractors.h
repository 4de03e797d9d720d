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

#ifndef CONTRACTSCAN_SRC_EXTRACTORS_H_
#define CONTRACTSCAN_SRC_EXTRACTORS_H_

#include <tree_sitter/api.h>

#include <string_view>

#include "contractscan/source_model.h"

namespace contractscan::internal {

// Fill `unit` from a parsed tree. `unit.path` and `unit.language` are set by
// the caller.
void ExtractJava(TSNode root, std::string_view src, SourceUnit& unit);
void ExtractKotlin(TSNode root, std::string_view src, SourceUnit& unit);

}  // namespace contractscan::internal

#endif  // CONTRACTSCAN_SRC_EXTRACTORS_H_
