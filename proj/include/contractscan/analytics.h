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

#ifndef CONTRACTSCAN_ANALYTICS_H_
#define CONTRACTSCAN_ANALYTICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "contractscan/catalog.h"
#include "contractscan/snapshot.h"

namespace contractscan {

// Mean absolute difference over twice the mean:
//   G = sum_i sum_j |x_i - x_j| / (2 n sum x).
// Zero when all values are zero. Fails on empty or negative input.
absl::StatusOr<double> Gini(std::span<const double> values);

// Midpoint of the two middle values for even sizes; 0 for empty input.
double Median(std::vector<double> values);
double Mean(std::span<const double> values);

struct ProjectCount {
  std::string project_id;
  int64_t count = 0;
  friend bool operator==(const ProjectCount&, const ProjectCount&) = default;
};

struct SummaryOptions {
  int top_n = 5;
  // Restricts records and the project population to one language.
  std::optional<Language> language;
};

struct UsageSummary {
  std::optional<Language> language;
  int64_t total_records = 0;
  // Projects in the population, zero-contract projects included.
  int64_t project_count = 0;
  std::map<Category, int64_t> counts_by_category;
  std::map<std::string, int64_t> counts_by_construct;
  // Catalog group rows; ids missing from the catalog count under their id.
  std::map<std::string, int64_t> counts_by_group;
  std::map<ContractKind, int64_t> counts_by_kind;
  std::map<Category, int64_t> projects_with_at_least_one;
  std::map<Category, double> gini_by_category;
  std::map<Category, std::vector<ProjectCount>> top_projects;
  int64_t visible_methods_and_constructors = 0;
  // Records over visible methods and constructors; 0 when there are none.
  double contract_to_method_ratio = 0;
};

// One summary over a set of snapshots. A project id appearing in several
// snapshots is reported as "<projectId>@<snapshotId>".
UsageSummary Summarize(std::span<const SnapshotReport> snapshots, const Catalog& catalog,
                       const SummaryOptions& options = {});

struct VersionPairCounts {
  std::string project_id;
  int64_t methods_v1 = 0;  // Visible methods and constructors.
  int64_t contracts_v1 = 0;
  int64_t methods_v2 = 0;
  int64_t contracts_v2 = 0;
};

struct MedianMean {
  double median = 0;
  double mean = 0;
};

struct RatioMetrics {
  MedianMean methods_v1, contracts_v1, ratio_v1;
  MedianMean methods_v2, contracts_v2, ratio_v2;
  MedianMean ratio_delta;  // ratio(v2) - ratio(v1) per project.
  std::vector<std::string> zero_method_projects;
};

RatioMetrics ComputeRatioMetrics(std::span<const VersionPairCounts> projects);

}  // namespace contractscan

#endif  // CONTRACTSCAN_ANALYTICS_H_
