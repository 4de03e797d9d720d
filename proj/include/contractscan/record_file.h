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

// JSON record files, one per snapshot. Serialization is canonical, so
// write(parse(write(x))) == write(x) byte for byte.

#ifndef CONTRACTSCAN_RECORD_FILE_H_
#define CONTRACTSCAN_RECORD_FILE_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "contractscan/snapshot.h"
#include "json.hpp"

namespace contractscan {

nlohmann::ordered_json RecordToJson(const ContractRecord& record);
absl::StatusOr<ContractRecord> RecordFromJson(const nlohmann::json& j);

nlohmann::ordered_json SnapshotToJson(const SnapshotReport& report);
absl::StatusOr<SnapshotReport> SnapshotFromJson(const nlohmann::json& j);

std::string SerializeSnapshot(const SnapshotReport& report);
absl::StatusOr<SnapshotReport> ParseSnapshot(std::string_view text);

absl::StatusOr<SnapshotReport> ReadSnapshotFile(const std::filesystem::path& path);
absl::Status WriteSnapshotFile(const std::filesystem::path& path, const SnapshotReport& report);

}  // namespace contractscan

#endif  // CONTRACTSCAN_RECORD_FILE_H_
