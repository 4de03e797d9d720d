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

// Corpus construction: candidate ingestion, inclusion criteria, version
// pair selection and stripped snapshot directories.

#ifndef CONTRACTSCAN_CORPUS_H_
#define CONTRACTSCAN_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/time/civil_time.h"

namespace contractscan {

enum class ProjectLanguage { kJava, kKotlin, kMixed };
std::string_view ProjectLanguageName(ProjectLanguage language);  // "Java", ...
std::optional<ProjectLanguage> ParseProjectLanguage(std::string_view name);

struct ProjectEntry {
  std::string project_id;
  std::string source_url;
  ProjectLanguage language = ProjectLanguage::kJava;
  std::string version1_ref;
  std::optional<std::string> version2_ref;  // Absent: no evolution analysis.
  std::string local_path;                   // Empty: clone from source_url.
};

struct CorpusManifest {
  std::vector<ProjectEntry> projects;
};

// Unique non-empty project ids and a non-empty first ref.
absl::Status ValidateManifest(const CorpusManifest& manifest);
absl::StatusOr<CorpusManifest> ParseManifest(std::string_view json_text);
std::string SerializeManifest(const CorpusManifest& manifest);
absl::StatusOr<CorpusManifest> ReadManifestFile(const std::filesystem::path& path);
absl::Status WriteManifestFile(const std::filesystem::path& path, const CorpusManifest& manifest);

struct RefInfo {
  std::string name;
  std::optional<int64_t> unix_seconds;  // Creation time.
};

struct ProjectRefs {
  std::vector<RefInfo> releases;
  std::vector<RefInfo> tags;
  std::optional<std::string> head;  // Default-branch head commit.
};

struct CandidateProject {
  std::string project_id;
  std::string source_url;
  std::optional<bool> archived;
  std::optional<absl::CivilDay> last_commit;
  std::vector<std::string> languages;  // Forge language tags.
  ProjectRefs refs;
  std::string local_path;
};

struct Diagnostic {
  std::string project_id;
  std::string message;
};

struct FilterCriteria {
  std::string forge_host = "github.com";
  absl::CivilDay cutoff{2018, 1, 1};  // Inclusive.
};

struct FilterResult {
  std::vector<CandidateProject> kept;  // Input order.
  std::vector<Diagnostic> diagnostics;
};

// Keeps candidates hosted on the forge, tagged Java or Kotlin, not archived
// and committed to on or after the cutoff. Missing metadata excludes.
FilterResult FilterProjects(std::span<const CandidateProject> candidates,
                            const FilterCriteria& criteria = {});

// Host part of an https, ssh or scp-style URL; empty if none.
std::string UrlHost(std::string_view url);

struct VersionPair {
  std::string v1;
  std::optional<std::string> v2;
  std::string source;  // "release", "tag" or "head".
  // Oldest or newest was decided by name order because creation times tied
  // or were missing; worth a manual look.
  bool ambiguous = false;
};

// Oldest and newest release if there are two; else oldest and newest tag;
// else the head alone. NotFound when there is nothing to check out.
absl::StatusOr<VersionPair> SelectVersionPair(const ProjectRefs& refs);

// Pluggable candidate ingestion.
class CandidateSource {
 public:
  virtual ~CandidateSource() = default;
  virtual absl::StatusOr<std::vector<CandidateProject>> Load() = 0;
};

// Lines of "<projectId> <url>"; '#' starts a comment. Metadata, when given,
// is a JSON object keyed by project id:
//   {"archived": false, "lastCommit": "2023-04-01", "languages": ["Kotlin"],
//    "releases": [{"name": "v1", "date": "2020-01-01T00:00:00Z"}],
//    "tags": [...], "head": "<sha>", "localPath": "..."}
class PlainListSource : public CandidateSource {
 public:
  PlainListSource(std::filesystem::path list, std::optional<std::filesystem::path> metadata)
      : list_(std::move(list)), metadata_(std::move(metadata)) {}
  absl::StatusOr<std::vector<CandidateProject>> Load() override;

 private:
  std::filesystem::path list_;
  std::optional<std::filesystem::path> metadata_;
};

struct IngestResult {
  CorpusManifest manifest;
  std::vector<Diagnostic> diagnostics;  // Exclusions and ambiguous orders.
};

IngestResult BuildManifest(std::span<const CandidateProject> candidates,
                           const FilterCriteria& criteria = {});

bool IsSourceFile(const std::filesystem::path& path);  // .java, .kt, .kts

struct SnapshotDir {
  std::filesystem::path dir;
  int64_t files = 0;
  bool empty() const { return files == 0; }
};

struct MaterializeOptions {
  // Bare clones are kept here, one per project.
  std::filesystem::path cache_dir;
  std::string git = "git";
};

// Replaces `dest` with the Java and Kotlin files of `project` at `ref`,
// relative paths preserved. A local path containing `<ref>/` uses that
// directory; a local path that is a plain directory is copied as is; a
// local git repository or the source URL is checked out at `ref`.
absl::StatusOr<SnapshotDir> MaterializeSnapshot(const ProjectEntry& project,
                                                const std::string& ref,
                                                const std::filesystem::path& dest,
                                                const MaterializeOptions& options);

// Copies only Java and Kotlin files from `source` into a fresh `dest`.
absl::StatusOr<SnapshotDir> CopyStripped(const std::filesystem::path& source,
                                         const std::filesystem::path& dest);

struct FetchOutcome {
  std::string project_id;
  std::string ref;
  std::filesystem::path dir;
  absl::Status status;
  int64_t files = 0;
};

// Materializes every ref of every project under `out/<projectId>/<ref>`,
// up to `jobs` projects at a time. Failures are reported, not fatal.
std::vector<FetchOutcome> FetchCorpus(const CorpusManifest& manifest,
                                      const std::filesystem::path& out,
                                      const MaterializeOptions& options, int jobs);

// A ref as a single path component.
std::string RefDirName(std::string_view ref);

}  // namespace contractscan

#endif  // CONTRACTSCAN_CORPUS_H_
