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

#include "contractscan/report.h"

#include <set>

#include "absl/status/status.h"
#include "fmt/format.h"
#include "json.hpp"

namespace contractscan {

using nlohmann::ordered_json;

std::optional<OutputFormat> ParseOutputFormat(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "table") return OutputFormat::kTable;
  return std::nullopt;
}

std::string_view FormatExtension(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kTable: return "txt";
  }
  return "txt";
}

std::string CsvField(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

namespace {

std::string Number(double v) { return fmt::format("{:.10g}", v); }

std::string CsvRow(std::initializer_list<std::string_view> fields) {
  std::string row;
  bool first = true;
  for (std::string_view f : fields) {
    if (!first) row.push_back(',');
    first = false;
    row += CsvField(f);
  }
  row.push_back('\n');
  return row;
}

std::string SectionName(const UsageSummary& s) {
  return s.language ? std::string(LanguageName(*s.language)) : "all";
}

ordered_json MedianMeanJson(const MedianMean& m) {
  ordered_json j;
  j["median"] = m.median;
  j["mean"] = m.mean;
  return j;
}

ordered_json ClassificationJson(const Classification& c) {
  ordered_json j;
  j["kind"] = c.kind ? std::string(KindName(*c.kind)) : std::string();
  j["pattern"] = PatternName(c.pattern);
  j["critical"] = IsCritical(c.pattern);
  return j;
}

std::string ClassificationText(const Classification& c) {
  return c.kind ? fmt::format("{}:{}", KindName(*c.kind), PatternName(c.pattern))
                : std::string(PatternName(c.pattern));
}

std::string ClassificationsText(const std::vector<Classification>& cs) {
  std::string out;
  for (const Classification& c : cs) out += fmt::format("{}{}", out.empty() ? "" : " ", ClassificationText(c));
  return out;
}

}  // namespace

std::vector<UsageSummary> SummarizeByLanguage(std::span<const SnapshotReport> snapshots,
                                              const Catalog& catalog, int top_n) {
  std::vector<UsageSummary> out;
  out.push_back(Summarize(snapshots, catalog, {top_n, std::nullopt}));
  for (Language lang : {Language::kJava, Language::kKotlin}) {
    bool present = false;
    for (const SnapshotReport& s : snapshots) {
      present |= s.counts_by_language.contains(lang);
      for (const ContractRecord& r : s.records) present |= LanguageForPath(r.file_path) == lang;
    }
    if (present) out.push_back(Summarize(snapshots, catalog, {top_n, lang}));
  }
  return out;
}

std::string RenderUsage(std::span<const UsageSummary> sections, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    ordered_json root;
    root["sections"] = ordered_json::array();
    for (const UsageSummary& s : sections) {
      ordered_json j;
      j["language"] = SectionName(s);
      j["projects"] = s.project_count;
      j["totalRecords"] = s.total_records;
      j["visibleMethodsAndConstructors"] = s.visible_methods_and_constructors;
      j["contractToMethodRatio"] = s.contract_to_method_ratio;
      for (const auto& [c, n] : s.counts_by_category) j["byCategory"][std::string(CategoryName(c))] = n;
      for (const auto& [k, n] : s.counts_by_kind) j["byKind"][std::string(KindName(k))] = n;
      j["byConstruct"] = ordered_json::object();
      for (const auto& [id, n] : s.counts_by_construct) j["byConstruct"][id] = n;
      j["byGroup"] = ordered_json::object();
      for (const auto& [g, n] : s.counts_by_group) j["byGroup"][g] = n;
      for (const auto& [c, n] : s.projects_with_at_least_one) {
        j["projectsWithAtLeastOne"][std::string(CategoryName(c))] = n;
      }
      for (const auto& [c, g] : s.gini_by_category) j["gini"][std::string(CategoryName(c))] = g;
      for (const auto& [c, top] : s.top_projects) {
        ordered_json list = ordered_json::array();
        for (const ProjectCount& p : top) list.push_back({{"projectId", p.project_id}, {"count", p.count}});
        j["topProjects"][std::string(CategoryName(c))] = std::move(list);
      }
      root["sections"].push_back(std::move(j));
    }
    return root.dump(2) + "\n";
  }

  if (format == OutputFormat::kCsv) {
    std::string out = CsvRow({"language", "table", "key", "value"});
    for (const UsageSummary& s : sections) {
      const std::string lang = SectionName(s);
      out += CsvRow({lang, "total", "records", fmt::format("{}", s.total_records)});
      out += CsvRow({lang, "total", "projects", fmt::format("{}", s.project_count)});
      out += CsvRow({lang, "total", "visibleMethodsAndConstructors",
                     fmt::format("{}", s.visible_methods_and_constructors)});
      out += CsvRow({lang, "total", "contractToMethodRatio", Number(s.contract_to_method_ratio)});
      for (const auto& [c, n] : s.counts_by_category) {
        out += CsvRow({lang, "category", CategoryName(c), fmt::format("{}", n)});
      }
      for (const auto& [k, n] : s.counts_by_kind) {
        out += CsvRow({lang, "kind", KindName(k), fmt::format("{}", n)});
      }
      for (const auto& [id, n] : s.counts_by_construct) {
        out += CsvRow({lang, "construct", id, fmt::format("{}", n)});
      }
      for (const auto& [g, n] : s.counts_by_group) out += CsvRow({lang, "group", g, fmt::format("{}", n)});
      for (const auto& [c, n] : s.projects_with_at_least_one) {
        out += CsvRow({lang, "projectsWithAtLeastOne", CategoryName(c), fmt::format("{}", n)});
      }
      for (const auto& [c, g] : s.gini_by_category) out += CsvRow({lang, "gini", CategoryName(c), Number(g)});
      for (const auto& [c, top] : s.top_projects) {
        const std::string table = fmt::format("top{}", CategoryName(c));
        for (const ProjectCount& p : top) out += CsvRow({lang, table, p.project_id, fmt::format("{}", p.count)});
      }
    }
    return out;
  }

  std::string out;
  for (const UsageSummary& s : sections) {
    fmt::format_to(std::back_inserter(out), "== {}: {} records in {} projects, ratio {:.4f} ==\n", SectionName(s), s.total_records, s.project_count, s.contract_to_method_ratio);
    fmt::format_to(std::back_inserter(out), "{:<12} {:>10} {:>10} {:>8}\n", "category", "records", "projects", "gini");
    for (Category c : kAllCategories) {
      fmt::format_to(std::back_inserter(out), "{:<12} {:10} {:10} {:8.4f}\n", CategoryName(c), s.counts_by_category.at(c), s.projects_with_at_least_one.at(c), s.gini_by_category.at(c));
    }
    fmt::format_to(std::back_inserter(out), "{:<12} {:>10}\n", "kind", "records");
    for (ContractKind k : kAllKinds) {
      fmt::format_to(std::back_inserter(out), "{:<12} {:10}\n", KindName(k), s.counts_by_kind.at(k));
    }
    fmt::format_to(std::back_inserter(out), "{:<40} {:>10}\n", "construct", "records");
    for (const auto& [id, n] : s.counts_by_construct) fmt::format_to(std::back_inserter(out), "{:<40} {:10}\n", id, n);
    for (Category c : kAllCategories) {
      const auto& top = s.top_projects.at(c);
      if (top.empty()) continue;
      fmt::format_to(std::back_inserter(out), "top {}:", CategoryName(c));
      for (const ProjectCount& p : top) fmt::format_to(std::back_inserter(out), " {} ({})", p.project_id, p.count);
      out += "\n";
    }
    out += "\n";
  }
  return out;
}

absl::StatusOr<EvolutionReport> Evolve(const SnapshotReport& v1, const SnapshotReport& v2) {
  if (v1.project_id != v2.project_id) {
    return absl::InvalidArgumentError(fmt::format("project ids differ: '{}' vs '{}'", v1.project_id, v2.project_id));
  }
  EvolutionReport r;
  r.project_id = v1.project_id;
  r.v1_snapshot = v1.snapshot_id;
  r.v2_snapshot = v2.snapshot_id;
  r.build = BuildDiffRecords(v1, v2);
  r.tally = Tally(r.build.records);
  const VersionPairCounts counts{
      v1.project_id,
      v1.artifact_counts.methods_visible + v1.artifact_counts.constructors_visible,
      static_cast<int64_t>(v1.records.size()),
      v2.artifact_counts.methods_visible + v2.artifact_counts.constructors_visible,
      static_cast<int64_t>(v2.records.size())};
  r.ratios = ComputeRatioMetrics(std::span(&counts, 1));
  return r;
}

std::string RenderEvolution(const EvolutionReport& r, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    std::string out = CsvRow({"pattern", "count", "critical"});
    for (EvolutionPattern p : kAllPatterns) {
      out += CsvRow({PatternName(p), fmt::format("{}", r.tally.counts.at(p)), IsCritical(p) ? "true" : "false"});
    }
    return out;
  }
  if (format == OutputFormat::kJson) {
    ordered_json j;
    j["projectId"] = r.project_id;
    j["v1"] = r.v1_snapshot;
    j["v2"] = r.v2_snapshot;
    j["diffRecords"] = r.tally.diff_records;
    for (EvolutionPattern p : kAllPatterns) j["patterns"][std::string(PatternName(p))] = r.tally.counts.at(p);
    j["criticalClassifications"] = r.tally.critical_classifications;
    j["recordsWithCritical"] = r.tally.records_with_critical;
    j["skippedRecords"] = r.build.skipped_records;
    j["collisions"] = ordered_json::array();
    for (const MemberKey& k : r.build.collisions) j["collisions"].push_back(ToString(k));
    ordered_json ratios;
    ratios["methodsV1"] = MedianMeanJson(r.ratios.methods_v1);
    ratios["contractsV1"] = MedianMeanJson(r.ratios.contracts_v1);
    ratios["ratioV1"] = MedianMeanJson(r.ratios.ratio_v1);
    ratios["methodsV2"] = MedianMeanJson(r.ratios.methods_v2);
    ratios["contractsV2"] = MedianMeanJson(r.ratios.contracts_v2);
    ratios["ratioV2"] = MedianMeanJson(r.ratios.ratio_v2);
    ratios["ratioDelta"] = MedianMeanJson(r.ratios.ratio_delta);
    ratios["zeroMethodProjects"] = r.ratios.zero_method_projects;
    j["ratios"] = std::move(ratios);
    j["records"] = ordered_json::array();
    for (const DiffRecord& d : r.build.records) {
      ordered_json e;
      e["member"] = ToString(d.key);
      e["before"] = d.before.size();
      e["after"] = d.after.size();
      e["classifications"] = ordered_json::array();
      for (const Classification& c : d.classifications) e["classifications"].push_back(ClassificationJson(c));
      j["records"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }
  std::string out = fmt::format("{}: {} -> {}, {} diff records, {} critical\n", r.project_id, r.v1_snapshot, r.v2_snapshot, r.tally.diff_records, r.tally.records_with_critical);
  for (EvolutionPattern p : kAllPatterns) {
    fmt::format_to(std::back_inserter(out), "{:<18} {:8}{}\n", PatternName(p), r.tally.counts.at(p), IsCritical(p) ? "  (critical)" : "");
  }
  fmt::format_to(std::back_inserter(out), "ratio v1 {:.4f}, v2 {:.4f}, delta {:.4f}\n", r.ratios.ratio_v1.mean, r.ratios.ratio_v2.mean, r.ratios.ratio_delta.mean);
  for (const DiffRecord& d : r.build.records) {
    bool changed = false;
    for (const Classification& c : d.classifications) changed |= c.pattern != EvolutionPattern::kUnchanged;
    if (!changed) continue;
    fmt::format_to(std::back_inserter(out), "  {} [{} -> {}] {}\n", ToString(d.key), d.before.size(), d.after.size(), ClassificationsText(d.classifications));
  }
  return out;
}

std::string RenderLsp(std::string_view project_id, const LspReport& report, OutputFormat format) {
  std::map<EvolutionPattern, int64_t> counts;
  for (EvolutionPattern p : kAllPatterns) counts[p] = 0;
  int64_t violations = 0;
  for (const OverridePair& p : report.pairs) {
    for (const Classification& c : p.diff.classifications) ++counts[c.pattern];
    violations += p.violation ? 1 : 0;
  }

  if (format == OutputFormat::kCsv) {
    std::string out = CsvRow({"subMember", "superMember", "subFile", "subLine", "superFile",
                              "superLine", "kind", "pattern", "violation"});
    for (const OverridePair& p : report.pairs) {
      for (const Classification& c : p.diff.classifications) {
        out += CsvRow({ToString(p.diff.key), ToString(p.super_key), p.sub_file, fmt::format("{}", p.sub_line),
                       p.super_file, fmt::format("{}", p.super_line), c.kind ? KindName(*c.kind) : "",
                       PatternName(c.pattern), IsCritical(c.pattern) ? "true" : "false"});
      }
    }
    return out;
  }
  if (format == OutputFormat::kJson) {
    ordered_json j;
    j["projectId"] = project_id;
    j["resolvedEdges"] = report.resolved_edges;
    j["unresolvedEdges"] = report.unresolved_edges;
    j["overridePairs"] = report.override_pairs;
    j["pairsWithContracts"] = report.pairs.size();
    j["violations"] = violations;
    for (const auto& [p, n] : counts) j["patterns"][std::string(PatternName(p))] = n;
    j["pairs"] = ordered_json::array();
    for (const OverridePair& p : report.pairs) {
      ordered_json e;
      e["subMember"] = ToString(p.diff.key);
      e["superMember"] = ToString(p.super_key);
      e["subFile"] = p.sub_file;
      e["subLine"] = p.sub_line;
      e["superFile"] = p.super_file;
      e["superLine"] = p.super_line;
      e["before"] = p.diff.before.size();
      e["after"] = p.diff.after.size();
      e["classifications"] = ordered_json::array();
      for (const Classification& c : p.diff.classifications) e["classifications"].push_back(ClassificationJson(c));
      e["violation"] = p.violation;
      j["pairs"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }
  std::string out = fmt::format("{}: {} override pairs ({} with contracts), {} violations; edges {} resolved, {} unresolved\n", project_id, report.override_pairs, report.pairs.size(), violations, report.resolved_edges, report.unresolved_edges);
  for (const auto& [p, n] : counts) fmt::format_to(std::back_inserter(out), "{:<18} {:8}\n", PatternName(p), n);
  for (const OverridePair& p : report.pairs) {
    if (!p.violation) continue;
    fmt::format_to(std::back_inserter(out), "  VIOLATION {} ({}:{}) overrides {} ({}:{}): {}\n", ToString(p.diff.key), p.sub_file, p.sub_line, ToString(p.super_key), p.super_file, p.super_line, ClassificationsText(p.diff.classifications));
  }
  return out;
}

std::string RenderScanSummary(const ScanResult& scan, OutputFormat format) {
  const SnapshotReport& r = scan.report;
  std::map<Category, int64_t> by_category;
  for (Category c : kAllCategories) by_category[c] = 0;
  for (const ContractRecord& rec : r.records) ++by_category[rec.category];
  if (format == OutputFormat::kJson) {
    ordered_json j;
    j["projectId"] = r.project_id;
    j["snapshotId"] = r.snapshot_id;
    j["files"] = scan.files;
    j["records"] = r.records.size();
    for (const auto& [c, n] : by_category) j["byCategory"][std::string(CategoryName(c))] = n;
    j["skipped"] = ordered_json::array();
    for (const FileIssue& f : scan.skipped) j["skipped"].push_back({{"file", f.file_path}, {"message", f.message}});
    j["warnings"] = ordered_json::array();
    for (const FileIssue& f : scan.warnings) j["warnings"].push_back({{"file", f.file_path}, {"message", f.message}});
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::kCsv) {
    std::string out = CsvRow({"projectId", "snapshotId", "category", "records"});
    for (const auto& [c, n] : by_category) {
      out += CsvRow({r.project_id, r.snapshot_id, CategoryName(c), fmt::format("{}", n)});
    }
    return out;
  }
  std::string out = fmt::format("{}@{}: {} files, {} records", r.project_id, r.snapshot_id, scan.files, r.records.size());
  for (const auto& [c, n] : by_category) fmt::format_to(std::back_inserter(out), ", {} {}", CategoryName(c), n);
  out += "\n";
  for (const FileIssue& f : scan.skipped) fmt::format_to(std::back_inserter(out), "  skipped {}: {}\n", f.file_path, f.message);
  for (const FileIssue& f : scan.warnings) fmt::format_to(std::back_inserter(out), "  warning {}: {}\n", f.file_path, f.message);
  return out;
}

}  // namespace contractscan
