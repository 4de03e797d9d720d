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

#include "contractscan/record_file.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "fmt/format.h"

namespace contractscan {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

absl::Status Missing(std::string_view field, std::string_view what) {
  return absl::InvalidArgumentError(fmt::format("{}: missing or mistyped field '{}'", what, field));
}

absl::StatusOr<std::string> GetString(const json& j, const char* field, std::string_view what) {
  auto it = j.find(field);
  if (it == j.end() || !it->is_string()) return Missing(field, what);
  return it->get<std::string>();
}

absl::StatusOr<int64_t> GetInt(const json& j, const char* field, std::string_view what) {
  auto it = j.find(field);
  if (it == j.end() || !it->is_number_integer()) return Missing(field, what);
  return it->get<int64_t>();
}

ojson CountsToJson(const ArtifactCounts& c) {
  ojson j;
  j["compilationUnits"] = c.compilation_units;
  j["classes"] = c.classes;
  j["methodsAll"] = c.methods_all;
  j["constructorsAll"] = c.constructors_all;
  j["methodsVisible"] = c.methods_visible;
  j["constructorsVisible"] = c.constructors_visible;
  j["kloc"] = c.Kloc();
  return j;
}

absl::StatusOr<ArtifactCounts> CountsFromJson(const json& j) {
  constexpr std::string_view kWhat = "artifactCounts";
  if (!j.is_object()) return Missing("artifactCounts", "snapshot");
  ArtifactCounts c;
  struct Field {
    const char* name;
    int64_t ArtifactCounts::*member;
  };
  for (const Field& f : {Field{"compilationUnits", &ArtifactCounts::compilation_units},
                         Field{"classes", &ArtifactCounts::classes},
                         Field{"methodsAll", &ArtifactCounts::methods_all},
                         Field{"constructorsAll", &ArtifactCounts::constructors_all},
                         Field{"methodsVisible", &ArtifactCounts::methods_visible},
                         Field{"constructorsVisible", &ArtifactCounts::constructors_visible}}) {
    absl::StatusOr<int64_t> v = GetInt(j, f.name, kWhat);
    if (!v.ok()) return v.status();
    c.*f.member = *v;
  }
  auto kloc = j.find("kloc");
  if (kloc == j.end() || !kloc->is_number()) return Missing("kloc", kWhat);
  c.lines = std::llround(kloc->get<double>() * 1000.0);
  return c;
}

}  // namespace

ojson RecordToJson(const ContractRecord& r) {
  ojson j;
  j["filePath"] = r.file_path;
  j["constructId"] = r.construct_id;
  j["category"] = CategoryName(r.category);
  j["kind"] = KindName(r.kind);
  j["conditionText"] = r.condition_text;
  j["artifactName"] = r.artifact_name;
  j["artifactKind"] = ArtifactKindName(r.artifact_kind);
  j["ownerClass"] = r.owner_class;
  if (r.parameter_index) j["parameterIndex"] = *r.parameter_index;
  j["line"] = r.line;
  return j;
}

absl::StatusOr<ContractRecord> RecordFromJson(const json& j) {
  constexpr std::string_view kWhat = "record";
  if (!j.is_object()) return absl::InvalidArgumentError("record: not an object");
  ContractRecord r;
  struct StringField {
    const char* name;
    std::string ContractRecord::*member;
  };
  for (const StringField& f : {StringField{"filePath", &ContractRecord::file_path},
                               StringField{"constructId", &ContractRecord::construct_id},
                               StringField{"conditionText", &ContractRecord::condition_text},
                               StringField{"artifactName", &ContractRecord::artifact_name},
                               StringField{"ownerClass", &ContractRecord::owner_class}}) {
    absl::StatusOr<std::string> v = GetString(j, f.name, kWhat);
    if (!v.ok()) return v.status();
    r.*f.member = *std::move(v);
  }
  absl::StatusOr<std::string> category = GetString(j, "category", kWhat);
  if (!category.ok()) return category.status();
  std::optional<Category> c = ParseCategory(*category);
  if (!c) return absl::InvalidArgumentError(fmt::format("record: unknown category '{}'", *category));
  r.category = *c;
  absl::StatusOr<std::string> kind = GetString(j, "kind", kWhat);
  if (!kind.ok()) return kind.status();
  std::optional<ContractKind> k = ParseKind(*kind);
  if (!k) return absl::InvalidArgumentError(fmt::format("record: unknown kind '{}'", *kind));
  r.kind = *k;
  absl::StatusOr<std::string> artifact = GetString(j, "artifactKind", kWhat);
  if (!artifact.ok()) return artifact.status();
  std::optional<ArtifactKind> a = ParseArtifactKind(*artifact);
  if (!a) {
    return absl::InvalidArgumentError(fmt::format("record: unknown artifactKind '{}'", *artifact));
  }
  r.artifact_kind = *a;
  if (j.contains("parameterIndex")) {
    absl::StatusOr<int64_t> index = GetInt(j, "parameterIndex", kWhat);
    if (!index.ok()) return index.status();
    r.parameter_index = static_cast<int>(*index);
  }
  absl::StatusOr<int64_t> line = GetInt(j, "line", kWhat);
  if (!line.ok()) return line.status();
  r.line = static_cast<int>(*line);
  return r;
}

ojson SnapshotToJson(const SnapshotReport& report) {
  ojson j;
  j["projectId"] = report.project_id;
  j["snapshotId"] = report.snapshot_id;
  j["tool"] = ojson{{"name", report.tool.name},
                    {"version", report.tool.version},
                    {"catalogHash", report.tool.catalog_hash}};
  ojson counts = CountsToJson(report.artifact_counts);
  if (!report.counts_by_language.empty()) {
    ojson by_language = ojson::object();
    for (const auto& [language, c] : report.counts_by_language) {
      by_language[std::string(LanguageName(language))] = CountsToJson(c);
    }
    counts["byLanguage"] = std::move(by_language);
  }
  j["artifactCounts"] = std::move(counts);
  ojson records = ojson::array();
  for (const ContractRecord& r : report.records) records.push_back(RecordToJson(r));
  j["records"] = std::move(records);
  ojson members = ojson::array();
  for (const MemberInfo& m : report.members) {
    members.push_back(ojson{{"ownerClass", m.key.owner_class},
                            {"name", m.key.member_name},
                            {"kind", ArtifactKindName(m.key.kind)},
                            {"parameterTypes", m.key.parameter_types},
                            {"filePath", m.file_path},
                            {"line", m.line},
                            {"endLine", m.end_line}});
  }
  j["members"] = std::move(members);
  return j;
}

absl::StatusOr<SnapshotReport> SnapshotFromJson(const json& j) {
  constexpr std::string_view kWhat = "snapshot";
  if (!j.is_object()) return absl::InvalidArgumentError("snapshot: not an object");
  SnapshotReport report;
  absl::StatusOr<std::string> project = GetString(j, "projectId", kWhat);
  if (!project.ok()) return project.status();
  report.project_id = *project;
  absl::StatusOr<std::string> snapshot = GetString(j, "snapshotId", kWhat);
  if (!snapshot.ok()) return snapshot.status();
  report.snapshot_id = *snapshot;

  auto tool = j.find("tool");
  if (tool == j.end() || !tool->is_object()) return Missing("tool", kWhat);
  for (auto [field, member] : {std::pair{"name", &ToolInfo::name},
                               std::pair{"version", &ToolInfo::version},
                               std::pair{"catalogHash", &ToolInfo::catalog_hash}}) {
    absl::StatusOr<std::string> v = GetString(*tool, field, "tool");
    if (!v.ok()) return v.status();
    report.tool.*member = *v;
  }

  auto counts = j.find("artifactCounts");
  if (counts == j.end()) return Missing("artifactCounts", kWhat);
  absl::StatusOr<ArtifactCounts> parsed = CountsFromJson(*counts);
  if (!parsed.ok()) return parsed.status();
  report.artifact_counts = *parsed;
  if (auto by = counts->find("byLanguage"); by != counts->end()) {
    if (!by->is_object()) return Missing("byLanguage", "artifactCounts");
    for (auto it = by->begin(); it != by->end(); ++it) {
      std::optional<Language> language;
      if (it.key() == "java") language = Language::kJava;
      if (it.key() == "kotlin") language = Language::kKotlin;
      if (!language) {
        return absl::InvalidArgumentError(fmt::format("byLanguage: unknown language '{}'", it.key()));
      }
      absl::StatusOr<ArtifactCounts> c = CountsFromJson(it.value());
      if (!c.ok()) return c.status();
      report.counts_by_language[*language] = *c;
    }
  }

  auto records = j.find("records");
  if (records == j.end() || !records->is_array()) return Missing("records", kWhat);
  for (const json& r : *records) {
    absl::StatusOr<ContractRecord> record = RecordFromJson(r);
    if (!record.ok()) return record.status();
    report.records.push_back(*std::move(record));
  }

  if (auto members = j.find("members"); members != j.end()) {
    if (!members->is_array()) return Missing("members", kWhat);
    for (const json& m : *members) {
      MemberInfo info;
      for (auto [field, member] :
           {std::pair{"ownerClass", &MemberKey::owner_class}, std::pair{"name", &MemberKey::member_name}}) {
        absl::StatusOr<std::string> v = GetString(m, field, "member");
        if (!v.ok()) return v.status();
        info.key.*member = *v;
      }
      absl::StatusOr<std::string> kind = GetString(m, "kind", "member");
      if (!kind.ok()) return kind.status();
      std::optional<ArtifactKind> k = ParseArtifactKind(*kind);
      if (!k) return absl::InvalidArgumentError(fmt::format("member: unknown kind '{}'", *kind));
      info.key.kind = *k;
      auto types = m.find("parameterTypes");
      if (types == m.end() || !types->is_array()) return Missing("parameterTypes", "member");
      for (const json& t : *types) {
        if (!t.is_string()) return Missing("parameterTypes", "member");
        info.key.parameter_types.push_back(t.get<std::string>());
      }
      absl::StatusOr<std::string> file = GetString(m, "filePath", "member");
      if (!file.ok()) return file.status();
      info.file_path = *file;
      absl::StatusOr<int64_t> line = GetInt(m, "line", "member");
      if (!line.ok()) return line.status();
      absl::StatusOr<int64_t> end = GetInt(m, "endLine", "member");
      if (!end.ok()) return end.status();
      info.line = static_cast<int>(*line);
      info.end_line = static_cast<int>(*end);
      report.members.push_back(std::move(info));
    }
  }
  return report;
}

std::string SerializeSnapshot(const SnapshotReport& report) {
  return SnapshotToJson(report).dump(2) + "\n";
}

absl::StatusOr<SnapshotReport> ParseSnapshot(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return absl::InvalidArgumentError("not valid JSON");
  return SnapshotFromJson(j);
}

absl::StatusOr<SnapshotReport> ReadSnapshotFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(fmt::format("{}: cannot open record file", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  absl::StatusOr<SnapshotReport> report = ParseSnapshot(text.str());
  if (!report.ok()) {
    return absl::Status(report.status().code(),
                        fmt::format("{}: {}", path.string(), std::string(report.status().message())));
  }
  return report;
}

absl::Status WriteSnapshotFile(const std::filesystem::path& path, const SnapshotReport& report) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      return absl::PermissionDeniedError(
          fmt::format("{}: cannot create directory: {}", path.parent_path().string(), ec.message()));
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError(fmt::format("{}: cannot write", path.string()));
  out << SerializeSnapshot(report);
  out.close();
  if (!out) return absl::DataLossError(fmt::format("{}: write failed", path.string()));
  return absl::OkStatus();
}

}  // namespace contractscan
