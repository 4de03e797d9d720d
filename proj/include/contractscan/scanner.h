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

// Scans a source tree into a SnapshotReport.

#ifndef CONTRACTSCAN_SCANNER_H_
#define CONTRACTSCAN_SCANNER_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "contractscan/catalog.h"
#include "contractscan/snapshot.h"
#include "contractscan/source_model.h"

namespace contractscan {

struct ScanOptions {
  int jobs = 1;
  std::string project_id;   // Defaults to the root directory name.
  std::string snapshot_id;  // Defaults to "HEAD".
  bool keep_units = false;  // Retain parsed units in ScanResult::units.
};

struct FileIssue {
  std::string file_path;
  std::string message;
};

struct ScanResult {
  SnapshotReport report;
  int64_t files = 0;
  // Files that could not be read; they contribute nothing.
  std::vector<FileIssue> skipped;
  // Files with syntax errors; their recoverable declarations are kept.
  std::vector<FileIssue> warnings;
  std::vector<SourceUnit> units;  // Path order, when requested.
};

// Java and Kotlin files under `root` as sorted '/'-separated relative
// paths. A file root yields its own name.
absl::StatusOr<std::vector<std::string>> ListSourceFiles(const std::filesystem::path& root);

// Parses and detects files on up to `options.jobs` threads. The result does
// not depend on the thread count. Fails only when `root` is unreadable.
absl::StatusOr<ScanResult> ScanTree(const std::filesystem::path& root, const Catalog& catalog,
                                    const ScanOptions& options = {});

}  // namespace contractscan

#endif  // CONTRACTSCAN_SCANNER_H_
