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

#include "contractscan/corpus.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "absl/status/status.h"
#include "absl/time/time.h"
#include "contractscan/text.h"
#include "fmt/format.h"
#include "json.hpp"
#include "process.h"

namespace contractscan {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::string_view ProjectLanguageName(ProjectLanguage language) {
  switch (language) {
    case ProjectLanguage::kJava: return "Java";
    case ProjectLanguage::kKotlin: return "Kotlin";
    case ProjectLanguage::kMixed: return "Mixed";
  }
  return "Mixed";
}

std::optional<ProjectLanguage> ParseProjectLanguage(std::string_view name) {
  const std::string lower = AsciiLower(name);
  if (lower == "java") return ProjectLanguage::kJava;
  if (lower == "kotlin") return ProjectLanguage::kKotlin;
  if (lower == "mixed") return ProjectLanguage::kMixed;
  return std::nullopt;
}

absl::Status ValidateManifest(const CorpusManifest& manifest) {
  std::set<std::string> seen;
  for (const ProjectEntry& p : manifest.projects) {
    if (p.project_id.empty()) return absl::InvalidArgumentError("project with empty projectId");
    if (!seen.insert(p.project_id).second) {
      return absl::InvalidArgumentError(fmt::format("duplicate projectId '{}'", p.project_id));
    }
    if (p.version1_ref.empty()) {
      return absl::InvalidArgumentError(fmt::format("{}: missing version1Ref", p.project_id));
    }
    if (p.version2_ref && p.version2_ref->empty()) {
      return absl::InvalidArgumentError(fmt::format("{}: empty version2Ref", p.project_id));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<CorpusManifest> ParseManifest(std::string_view json_text) {
  json j = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object() || !j.contains("projects") ||
      !j["projects"].is_array()) {
    return absl::InvalidArgumentError("manifest must be an object with a 'projects' array");
  }
  CorpusManifest m;
  for (const json& p : j["projects"]) {
    if (!p.is_object()) return absl::InvalidArgumentError("manifest project is not an object");
    auto str = [&](const char* key) -> std::optional<std::string> {
      auto it = p.find(key);
      if (it == p.end() || !it->is_string()) return std::nullopt;
      return it->get<std::string>();
    };
    ProjectEntry e;
    std::optional<std::string> id = str("projectId");
    std::optional<std::string> v1 = str("version1Ref");
    std::optional<std::string> lang = str("language");
    if (!id || !v1 || !lang) {
      return absl::InvalidArgumentError(
          "manifest project needs string projectId, language and version1Ref");
    }
    std::optional<ProjectLanguage> language = ParseProjectLanguage(*lang);
    if (!language) {
      return absl::InvalidArgumentError(fmt::format("{}: unknown language '{}'", *id, *lang));
    }
    e.project_id = *id;
    e.language = *language;
    e.version1_ref = *v1;
    e.source_url = str("sourceUrl").value_or("");
    e.version2_ref = str("version2Ref");
    e.local_path = str("localPath").value_or("");
    m.projects.push_back(std::move(e));
  }
  if (absl::Status s = ValidateManifest(m); !s.ok()) return s;
  return m;
}

std::string SerializeManifest(const CorpusManifest& manifest) {
  ordered_json projects = ordered_json::array();
  for (const ProjectEntry& p : manifest.projects) {
    ordered_json e;
    e["projectId"] = p.project_id;
    e["sourceUrl"] = p.source_url;
    e["language"] = ProjectLanguageName(p.language);
    e["version1Ref"] = p.version1_ref;
    if (p.version2_ref) e["version2Ref"] = *p.version2_ref;
    if (!p.local_path.empty()) e["localPath"] = p.local_path;
    projects.push_back(std::move(e));
  }
  ordered_json root;
  root["projects"] = std::move(projects);
  return root.dump(2) + "\n";
}

namespace {

absl::StatusOr<std::string> ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(fmt::format("{}: cannot open", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

absl::Status WriteAll(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) return absl::InternalError(fmt::format("{}: write failed", path.string()));
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<CorpusManifest> ReadManifestFile(const fs::path& path) {
  absl::StatusOr<std::string> text = ReadAll(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<CorpusManifest> m = ParseManifest(*text);
  if (!m.ok()) return absl::InvalidArgumentError(fmt::format("{}: {}", path.string(), std::string(m.status().message())));
  return m;
}

absl::Status WriteManifestFile(const fs::path& path, const CorpusManifest& manifest) {
  if (absl::Status s = ValidateManifest(manifest); !s.ok()) return s;
  return WriteAll(path, SerializeManifest(manifest));
}

std::string UrlHost(std::string_view url) {
  std::string_view rest = url;
  if (size_t scheme = rest.find("://"); scheme != std::string_view::npos) {
    rest.remove_prefix(scheme + 3);
  } else if (size_t colon = rest.find(':'); colon == std::string_view::npos ||
                                            rest.substr(0, colon).find('/') != std::string_view::npos) {
    return "";
  }
  if (size_t at = rest.find('@'); at != std::string_view::npos &&
                                  at < rest.find_first_of("/:")) {
    rest.remove_prefix(at + 1);
  }
  rest = rest.substr(0, rest.find_first_of("/:"));
  return AsciiLower(rest);
}

FilterResult FilterProjects(std::span<const CandidateProject> candidates,
                            const FilterCriteria& criteria) {
  FilterResult out;
  const std::string host = AsciiLower(criteria.forge_host);
  for (const CandidateProject& c : candidates) {
    auto exclude = [&](std::string why) { out.diagnostics.push_back({c.project_id, std::move(why)}); };
    if (UrlHost(c.source_url) != host) {
      exclude(fmt::format("not hosted at {}: '{}'", host, c.source_url));
      continue;
    }
    if (c.languages.empty() || !c.archived || !c.last_commit) {
      exclude("missing metadata (languages, archived or lastCommit)");
      continue;
    }
    const bool jvm = std::any_of(c.languages.begin(), c.languages.end(), [](const std::string& l) {
      return ParseProjectLanguage(l).has_value();
    });
    if (!jvm) {
      exclude("neither Java nor Kotlin");
      continue;
    }
    if (*c.archived) {
      exclude("archived");
      continue;
    }
    if (*c.last_commit < criteria.cutoff) {
      exclude(fmt::format("last commit {} before {}", absl::FormatCivilTime(*c.last_commit), absl::FormatCivilTime(criteria.cutoff)));
      continue;
    }
    out.kept.push_back(c);
  }
  return out;
}

namespace {

struct Ordered {
  std::vector<RefInfo> refs;
  bool ambiguous = false;
};

// Creation order, name order on ties; ambiguous when an end of the range
// was decided by name.
Ordered OrderRefs(std::vector<RefInfo> refs) {
  Ordered o;
  const bool all_timed = std::all_of(refs.begin(), refs.end(),
                                     [](const RefInfo& r) { return r.unix_seconds.has_value(); });
  if (!all_timed) {
    std::sort(refs.begin(), refs.end(),
              [](const RefInfo& a, const RefInfo& b) { return NaturalLess(a.name, b.name); });
    o.ambiguous = refs.size() >= 2;
  } else {
    std::sort(refs.begin(), refs.end(), [](const RefInfo& a, const RefInfo& b) {
      if (*a.unix_seconds != *b.unix_seconds) return *a.unix_seconds < *b.unix_seconds;
      return NaturalLess(a.name, b.name);
    });
    if (refs.size() >= 2) {
      o.ambiguous = *refs[0].unix_seconds == *refs[1].unix_seconds ||
                    *refs[refs.size() - 1].unix_seconds == *refs[refs.size() - 2].unix_seconds;
    }
  }
  o.refs = std::move(refs);
  return o;
}

}  // namespace

absl::StatusOr<VersionPair> SelectVersionPair(const ProjectRefs& refs) {
  for (const auto& [list, source] :
       {std::pair{&refs.releases, "release"}, std::pair{&refs.tags, "tag"}}) {
    if (list->size() < 2) continue;
    Ordered o = OrderRefs(*list);
    return VersionPair{o.refs.front().name, o.refs.back().name, source, o.ambiguous};
  }
  if (refs.head) return VersionPair{*refs.head, std::nullopt, "head", false};
  if (refs.releases.size() == 1) return VersionPair{refs.releases[0].name, std::nullopt, "release", false};
  if (refs.tags.size() == 1) return VersionPair{refs.tags[0].name, std::nullopt, "tag", false};
  return absl::NotFoundError("no release, tag or head to check out");
}

namespace {

std::optional<int64_t> ParseTimestamp(std::string_view text) {
  absl::Time t;
  std::string err;
  if (absl::ParseTime(absl::RFC3339_full, std::string(text), &t, &err)) return absl::ToUnixSeconds(t);
  absl::CivilDay day;
  if (absl::ParseCivilTime(std::string(text), &day)) {
    return absl::ToUnixSeconds(absl::FromCivil(day, absl::UTCTimeZone()));
  }
  return std::nullopt;
}

std::vector<RefInfo> ParseRefs(const json& meta, const char* key) {
  std::vector<RefInfo> out;
  auto it = meta.find(key);
  if (it == meta.end() || !it->is_array()) return out;
  for (const json& r : *it) {
    if (r.is_string()) {
      out.push_back({r.get<std::string>(), std::nullopt});
    } else if (r.is_object() && r.contains("name") && r["name"].is_string()) {
      RefInfo info{r["name"].get<std::string>(), std::nullopt};
      if (r.contains("date") && r["date"].is_string()) {
        info.unix_seconds = ParseTimestamp(r["date"].get<std::string>());
      }
      out.push_back(std::move(info));
    }
  }
  return out;
}

}  // namespace

absl::StatusOr<std::vector<CandidateProject>> PlainListSource::Load() {
  absl::StatusOr<std::string> list = ReadAll(list_);
  if (!list.ok()) return list.status();
  json metadata = json::object();
  if (metadata_) {
    absl::StatusOr<std::string> text = ReadAll(*metadata_);
    if (!text.ok()) return text.status();
    metadata = json::parse(*text, nullptr, /*allow_exceptions=*/false);
    if (metadata.is_discarded() || !metadata.is_object()) {
      return absl::InvalidArgumentError(
          fmt::format("{}: metadata must be a JSON object", metadata_->string()));
    }
  }
  std::vector<CandidateProject> out;
  std::set<std::string> seen;
  int line_no = 0;
  for (std::string_view line : Split(*list, '\n')) {
    ++line_no;
    line = line.substr(0, line.find('#'));
    std::vector<std::string_view> fields =
        SplitAny(line, " \t\r");
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: expected '<projectId> <url>'", list_.string(), line_no));
    }
    CandidateProject c;
    c.project_id = std::string(fields[0]);
    c.source_url = std::string(fields[1]);
    if (!seen.insert(c.project_id).second) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: duplicate project '{}'", list_.string(), line_no, c.project_id));
    }
    if (auto it = metadata.find(c.project_id); it != metadata.end() && it->is_object()) {
      const json& m = *it;
      if (m.contains("archived") && m["archived"].is_boolean()) c.archived = m["archived"].get<bool>();
      if (m.contains("lastCommit") && m["lastCommit"].is_string()) {
        const std::string date = m["lastCommit"].get<std::string>().substr(0, 10);
        absl::CivilDay day;
        if (absl::ParseCivilTime(date, &day)) c.last_commit = day;
      }
      if (m.contains("languages") && m["languages"].is_array()) {
        for (const json& l : m["languages"]) {
          if (l.is_string()) c.languages.push_back(l.get<std::string>());
        }
      }
      c.refs.releases = ParseRefs(m, "releases");
      c.refs.tags = ParseRefs(m, "tags");
      if (m.contains("head") && m["head"].is_string()) c.refs.head = m["head"].get<std::string>();
      if (m.contains("localPath") && m["localPath"].is_string()) {
        c.local_path = m["localPath"].get<std::string>();
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

IngestResult BuildManifest(std::span<const CandidateProject> candidates,
                           const FilterCriteria& criteria) {
  IngestResult out;
  FilterResult filtered = FilterProjects(candidates, criteria);
  out.diagnostics = std::move(filtered.diagnostics);
  for (const CandidateProject& c : filtered.kept) {
    absl::StatusOr<VersionPair> pair = SelectVersionPair(c.refs);
    if (!pair.ok()) {
      out.diagnostics.push_back({c.project_id, std::string(pair.status().message())});
      continue;
    }
    if (pair->ambiguous) {
      out.diagnostics.push_back(
          {c.project_id, fmt::format("ambiguous {} order; check version1Ref/version2Ref by hand", pair->source)});
    }
    ProjectEntry e;
    e.project_id = c.project_id;
    e.source_url = c.source_url;
    bool java = false, kotlin = false;
    for (const std::string& l : c.languages) {
      std::optional<ProjectLanguage> pl = ParseProjectLanguage(l);
      java |= pl == ProjectLanguage::kJava;
      kotlin |= pl == ProjectLanguage::kKotlin;
    }
    e.language = java && kotlin ? ProjectLanguage::kMixed
                                : (kotlin ? ProjectLanguage::kKotlin : ProjectLanguage::kJava);
    e.version1_ref = pair->v1;
    e.version2_ref = pair->v2;
    e.local_path = c.local_path;
    out.manifest.projects.push_back(std::move(e));
  }
  return out;
}

bool IsSourceFile(const fs::path& path) {
  const std::string ext = path.extension().string();
  return ext == ".java" || ext == ".kt" || ext == ".kts";
}

absl::StatusOr<SnapshotDir> CopyStripped(const fs::path& source, const fs::path& dest) {
  std::error_code ec;
  if (!fs::is_directory(source, ec)) {
    return absl::NotFoundError(fmt::format("{}: not a directory", source.string()));
  }
  fs::remove_all(dest, ec);
  fs::create_directories(dest, ec);
  if (ec) return absl::InternalError(fmt::format("{}: {}", dest.string(), ec.message()));
  SnapshotDir out{dest, 0};
  fs::recursive_directory_iterator it(source, fs::directory_options::skip_permission_denied, ec);
  if (ec) return absl::InternalError(fmt::format("{}: {}", source.string(), ec.message()));
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) return absl::InternalError(fmt::format("{}: {}", source.string(), ec.message()));
    const fs::directory_entry& entry = *it;
    if (entry.is_directory() && entry.path().filename() == ".git") {
      it.disable_recursion_pending();
      continue;
    }
    if (entry.is_symlink() || !entry.is_regular_file() || !IsSourceFile(entry.path())) continue;
    const fs::path target = dest / fs::relative(entry.path(), source);
    fs::create_directories(target.parent_path(), ec);
    fs::copy_file(entry.path(), target, fs::copy_options::overwrite_existing, ec);
    if (ec) return absl::InternalError(fmt::format("{}: {}", target.string(), ec.message()));
    ++out.files;
  }
  return out;
}

namespace {

absl::Status Git(const MaterializeOptions& options, std::vector<std::string> args) {
  args.insert(args.begin(), options.git);
  absl::StatusOr<internal::ProcessResult> r = internal::RunProcess(args);
  if (!r.ok()) return r.status();
  if (r->exit_code != 0) {
    std::string cmd;
    for (const std::string& a : args) cmd += fmt::format("{}{}", cmd.empty() ? "" : " ", a);
    return absl::UnavailableError(
        fmt::format("'{}' exited with {}: {}", cmd, r->exit_code, TrimWhitespace(r->output)));
  }
  return absl::OkStatus();
}

bool IsGitRepository(const fs::path& dir) {
  std::error_code ec;
  return fs::exists(dir / ".git", ec) || (fs::exists(dir / "HEAD", ec) && fs::is_directory(dir / "objects", ec));
}

}  // namespace

std::string RefDirName(std::string_view ref) {
  std::string out;
  for (char c : ref) {
    const bool safe = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_';
    out.push_back(safe ? c : '_');
  }
  if (out.empty() || out == "." || out == "..") out = fmt::format("ref{}", out);
  return out;
}

absl::StatusOr<SnapshotDir> MaterializeSnapshot(const ProjectEntry& project, const std::string& ref,
                                                const fs::path& dest,
                                                const MaterializeOptions& options) {
  std::error_code ec;
  if (!project.local_path.empty()) {
    const fs::path local(project.local_path);
    if (!ref.empty() && fs::is_directory(local / ref, ec)) return CopyStripped(local / ref, dest);
    if (!IsGitRepository(local)) return CopyStripped(local, dest);
  } else if (project.source_url.empty()) {
    return absl::InvalidArgumentError(fmt::format("{}: no sourceUrl or localPath", project.project_id));
  }

  const std::string origin = project.local_path.empty() ? project.source_url : project.local_path;
  const fs::path cache = options.cache_dir / fmt::format("{}.git", RefDirName(project.project_id));
  if (!fs::exists(cache / "HEAD", ec)) {
    fs::remove_all(cache, ec);
    fs::create_directories(options.cache_dir, ec);
    if (absl::Status s = Git(options, {"clone", "--bare", "--quiet", origin, cache.string()}); !s.ok()) {
      return s;
    }
  }
  const fs::path checkout = fs::path(dest.string() + ".checkout");
  fs::remove_all(checkout, ec);
  fs::create_directories(checkout, ec);
  absl::Status s = Git(options, {"--git-dir=" + cache.string(), "--work-tree=" + checkout.string(),
                                 "checkout", "--force", "--quiet", ref, "--", "."});
  if (!s.ok()) {
    fs::remove_all(checkout, ec);
    return s;
  }
  absl::StatusOr<SnapshotDir> out = CopyStripped(checkout, dest);
  fs::remove_all(checkout, ec);
  return out;
}

std::vector<FetchOutcome> FetchCorpus(const CorpusManifest& manifest, const fs::path& out,
                                      const MaterializeOptions& options, int jobs) {
  std::vector<std::pair<const ProjectEntry*, std::string>> work;
  for (const ProjectEntry& p : manifest.projects) {
    work.emplace_back(&p, p.version1_ref);
    if (p.version2_ref) work.emplace_back(&p, *p.version2_ref);
  }
  std::vector<FetchOutcome> outcomes(work.size());
  // Both refs of one project share a clone, so a project is one task.
  std::vector<std::vector<size_t>> tasks;
  for (size_t i = 0; i < work.size(); ++i) {
    if (i == 0 || work[i].first != work[i - 1].first) tasks.emplace_back();
    tasks.back().push_back(i);
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      for (size_t i : tasks[t]) {
        const auto& [project, ref] = work[i];
        FetchOutcome& o = outcomes[i];
        o.project_id = project->project_id;
        o.ref = ref;
        o.dir = out / RefDirName(project->project_id) / RefDirName(ref);
        absl::StatusOr<SnapshotDir> dir = MaterializeSnapshot(*project, ref, o.dir, options);
        o.status = dir.status();
        if (dir.ok()) o.files = dir->files;
      }
    }
  };
  const size_t n = std::clamp<size_t>(jobs <= 0 ? 1 : jobs, 1, std::max<size_t>(tasks.size(), 1));
  std::vector<std::thread> threads;
  for (size_t i = 1; i < n; ++i) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  return outcomes;
}

}  // namespace contractscan
