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

// Rendering of usage, evolution and inheritance results as JSON, CSV or
// aligned text. CSV output is comma separated with a header row and '\n'
// line endings.

#ifndef CONTRACTSCAN_REPORT_H_
#define CONTRACTSCAN_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "contractscan/analytics.h"
#include "contractscan/evolution.h"
#include "contractscan/inheritance.h"
#include "contractscan/scanner.h"

namespace contractscan {

enum class OutputFormat { kJson, kCsv, kTable };
std::optional<OutputFormat> ParseOutputFormat(std::string_view name);
std::string_view FormatExtension(OutputFormat format);  // "json", "csv", "txt"

// RFC 4180 quoting when needed.
std::string CsvField(std::string_view value);

// Combined summary first, then one per language present.
std::vector<UsageSummary> SummarizeByLanguage(std::span<const SnapshotReport> snapshots,
                                              const Catalog& catalog, int top_n = 5);

std::string RenderUsage(std::span<const UsageSummary> sections, OutputFormat format);

struct EvolutionReport {
  std::string project_id;
  std::string v1_snapshot;
  std::string v2_snapshot;
  DiffBuild build;
  PatternTally tally;
  RatioMetrics ratios;
};

// Fails when the project ids differ.
absl::StatusOr<EvolutionReport> Evolve(const SnapshotReport& v1, const SnapshotReport& v2);

std::string RenderEvolution(const EvolutionReport& report, OutputFormat format);

std::string RenderLsp(std::string_view project_id, const LspReport& report,
                      OutputFormat format);

std::string RenderScanSummary(const ScanResult& scan, OutputFormat format);

}  // namespace contractscan

#endif  // CONTRACTSCAN_REPORT_H_
