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

#include "contractscan/scanner.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "absl/status/status.h"
#include "contractscan/corpus.h"
#include "contractscan/detectors.h"
#include "fmt/format.h"

namespace contractscan {

namespace fs = std::filesystem;

absl::StatusOr<std::vector<std::string>> ListSourceFiles(const fs::path& root) {
  std::error_code ec;
  const fs::file_status st = fs::status(root, ec);
  if (ec || !fs::exists(st)) {
    return absl::NotFoundError(fmt::format("{}: cannot read", root.string()));
  }
  std::vector<std::string> out;
  if (fs::is_regular_file(st)) {
    if (IsSourceFile(root)) out.push_back(root.filename().generic_string());
    return out;
  }
  fs::recursive_directory_iterator it(root, ec);
  if (ec) return absl::NotFoundError(fmt::format("{}: {}", root.string(), ec.message()));
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) return absl::InternalError(fmt::format("{}: {}", root.string(), ec.message()));
    if (it->is_directory() && it->path().filename() == ".git") {
      it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file() && IsSourceFile(it->path())) {
      out.push_back(fs::relative(it->path(), root).generic_string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct FileOutcome {
  std::optional<SourceUnit> unit;
  std::vector<ContractRecord> records;
  std::optional<std::string> skipped;
};

FileOutcome ScanOne(const fs::path& full, const std::string& rel, const Catalog& catalog) {
  FileOutcome out;
  std::ifstream in(full, std::ios::binary);
  if (!in) {
    out.skipped = "cannot open";
    return out;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    out.skipped = "read error";
    return out;
  }
  absl::StatusOr<SourceUnit> unit = ParseFile(rel, ss.str());
  if (!unit.ok()) {
    out.skipped = std::string(unit.status().message());
    return out;
  }
  out.records = DetectAll(*unit, catalog);
  out.unit = std::move(*unit);
  return out;
}

}  // namespace

absl::StatusOr<ScanResult> ScanTree(const fs::path& root, const Catalog& catalog,
                                    const ScanOptions& options) {
  absl::StatusOr<std::vector<std::string>> files = ListSourceFiles(root);
  if (!files.ok()) return files.status();
  const bool single = fs::is_regular_file(root);
  const fs::path base = single ? root.parent_path() : root;

  std::vector<FileOutcome> outcomes(files->size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < files->size();) {
      outcomes[i] = ScanOne(base / (*files)[i], (*files)[i], catalog);
    }
  };
  const size_t threads_wanted = std::clamp<size_t>(options.jobs <= 0 ? 1 : options.jobs, 1,
                                                   std::max<size_t>(files->size(), 1));
  std::vector<std::thread> threads;
  for (size_t i = 1; i < threads_wanted; ++i) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  // Merge in path order; the thread count cannot affect the result.
  ScanResult result;
  result.files = static_cast<int64_t>(files->size());
  SnapshotReport& report = result.report;
  std::string name = fs::absolute(root).lexically_normal().filename().string();
  if (name.empty()) name = fs::absolute(root).lexically_normal().parent_path().filename().string();
  report.project_id = options.project_id.empty() ? name : options.project_id;
  report.snapshot_id = options.snapshot_id.empty() ? "HEAD" : options.snapshot_id;
  report.tool.catalog_hash = catalog.Hash();
  std::vector<SourceUnit> units;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    FileOutcome& o = outcomes[i];
    if (o.skipped) {
      result.skipped.push_back({(*files)[i], *o.skipped});
      continue;
    }
    if (!o.unit->status.ok) result.warnings.push_back({(*files)[i], o.unit->status.detail});
    std::move(o.records.begin(), o.records.end(), std::back_inserter(report.records));
    units.push_back(std::move(*o.unit));
  }
  std::stable_sort(report.records.begin(), report.records.end(), RecordLess);
  report.artifact_counts = CountArtifacts(units);
  for (const SourceUnit& u : units) {
    report.counts_by_language[u.language] += CountArtifacts(std::span(&u, 1));
  }
  report.members = BuildMemberInventory(units);
  if (options.keep_units) result.units = std::move(units);
  return result;
}

}  // namespace contractscan
