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

#include "contractscan/analytics.h"

#include <algorithm>
#include <numeric>

#include "absl/status/status.h"
#include "fmt/format.h"

namespace contractscan {

absl::StatusOr<double> Gini(std::span<const double> values) {
  if (values.empty()) return absl::InvalidArgumentError("gini of an empty distribution");
  std::vector<double> sorted(values.begin(), values.end());
  for (double v : sorted) {
    if (!(v >= 0)) return absl::InvalidArgumentError("gini requires non-negative values");
  }
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double sum = 0, weighted = 0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    sum += sorted[i];
    // sum_{i<j} (x_j - x_i) = sum_k (2k - n + 1) x_k over ascending order.
    weighted += (2.0 * static_cast<double>(i) - n + 1.0) * sorted[i];
  }
  if (sum == 0) return 0.0;
  const double g = weighted / (n * sum);
  return std::clamp(g, 0.0, 1.0);
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

double Mean(std::span<const double> values) {
  if (values.empty()) return 0;
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

UsageSummary Summarize(std::span<const SnapshotReport> snapshots, const Catalog& catalog,
                       const SummaryOptions& options) {
  UsageSummary s;
  s.language = options.language;
  for (Category c : kAllCategories) {
    s.counts_by_category[c] = 0;
    s.projects_with_at_least_one[c] = 0;
  }
  for (ContractKind k : kAllKinds) s.counts_by_kind[k] = 0;

  std::map<std::string, int> id_uses;
  for (const SnapshotReport& snap : snapshots) ++id_uses[snap.project_id];

  // Per-project category counts, in input order.
  std::vector<std::pair<std::string, std::map<Category, int64_t>>> per_project;
  for (const SnapshotReport& snap : snapshots) {
    const ArtifactCounts* counts = &snap.artifact_counts;
    bool in_population = true;
    std::vector<const ContractRecord*> records;
    for (const ContractRecord& r : snap.records) {
      if (options.language && LanguageForPath(r.file_path) != options.language) continue;
      records.push_back(&r);
    }
    if (options.language) {
      auto it = snap.counts_by_language.find(*options.language);
      counts = it == snap.counts_by_language.end() ? nullptr : &it->second;
      in_population = counts != nullptr ? counts->compilation_units > 0 : !records.empty();
    }
    if (!in_population) continue;

    std::string label = id_uses[snap.project_id] > 1
                            ? fmt::format("{}@{}", snap.project_id, snap.snapshot_id)
                            : snap.project_id;
    std::map<Category, int64_t> mine;
    for (const ContractRecord* r : records) {
      ++s.total_records;
      ++s.counts_by_category[r->category];
      ++s.counts_by_construct[r->construct_id];
      const ConstructSpec* spec = catalog.FindById(r->construct_id);
      ++s.counts_by_group[spec != nullptr ? spec->group : r->construct_id];
      ++s.counts_by_kind[r->kind];
      ++mine[r->category];
    }
    if (counts != nullptr) {
      s.visible_methods_and_constructors += counts->methods_visible + counts->constructors_visible;
    }
    per_project.emplace_back(std::move(label), std::move(mine));
  }
  s.project_count = static_cast<int64_t>(per_project.size());

  for (Category c : kAllCategories) {
    std::vector<double> values;
    std::vector<ProjectCount> ranked;
    for (const auto& [label, mine] : per_project) {
      auto it = mine.find(c);
      const int64_t n = it == mine.end() ? 0 : it->second;
      values.push_back(static_cast<double>(n));
      if (n > 0) ranked.push_back({label, n});
    }
    s.projects_with_at_least_one[c] = static_cast<int64_t>(ranked.size());
    absl::StatusOr<double> g = Gini(values);
    s.gini_by_category[c] = g.ok() ? *g : 0.0;
    std::sort(ranked.begin(), ranked.end(), [](const ProjectCount& a, const ProjectCount& b) {
      if (a.count != b.count) return a.count > b.count;
      return a.project_id < b.project_id;
    });
    if (options.top_n >= 0 && ranked.size() > static_cast<size_t>(options.top_n)) {
      ranked.resize(options.top_n);
    }
    s.top_projects[c] = std::move(ranked);
  }
  if (s.visible_methods_and_constructors > 0) {
    s.contract_to_method_ratio = static_cast<double>(s.total_records) /
                                 static_cast<double>(s.visible_methods_and_constructors);
  }
  return s;
}

RatioMetrics ComputeRatioMetrics(std::span<const VersionPairCounts> projects) {
  RatioMetrics m;
  std::vector<double> methods_v1, contracts_v1, ratio_v1, methods_v2, contracts_v2, ratio_v2,
      delta;
  auto ratio = [](int64_t contracts, int64_t methods) {
    return methods == 0 ? 0.0 : static_cast<double>(contracts) / static_cast<double>(methods);
  };
  for (const VersionPairCounts& p : projects) {
    if (p.methods_v1 == 0 || p.methods_v2 == 0) m.zero_method_projects.push_back(p.project_id);
    methods_v1.push_back(static_cast<double>(p.methods_v1));
    contracts_v1.push_back(static_cast<double>(p.contracts_v1));
    methods_v2.push_back(static_cast<double>(p.methods_v2));
    contracts_v2.push_back(static_cast<double>(p.contracts_v2));
    ratio_v1.push_back(ratio(p.contracts_v1, p.methods_v1));
    ratio_v2.push_back(ratio(p.contracts_v2, p.methods_v2));
    delta.push_back(ratio_v2.back() - ratio_v1.back());
  }
  auto both = [](const std::vector<double>& v) { return MedianMean{Median(v), Mean(v)}; };
  m.methods_v1 = both(methods_v1);
  m.contracts_v1 = both(contracts_v1);
  m.ratio_v1 = both(ratio_v1);
  m.methods_v2 = both(methods_v2);
  m.contracts_v2 = both(contracts_v2);
  m.ratio_v2 = both(ratio_v2);
  m.ratio_delta = both(delta);
  return m;
}

}  // namespace contractscan
