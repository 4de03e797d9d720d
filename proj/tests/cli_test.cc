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

// Runs the contractscan binary and checks exit codes and outputs.

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "test_util.h"

namespace contractscan {
namespace {

using ::contractscan::testing::Fixture;
using ::testing::HasSubstr;

namespace fs = std::filesystem;

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun Cli(const std::string& args) {
  CliRun r;
  const std::string command = std::string("'") + CONTRACTSCAN_CLI + "' " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Q(const fs::path& p) { return "'" + p.string() + "'"; }

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::path(::testing::TempDir()) / ("contractscan_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Cli, VersionAndUsageErrors) {
  CliRun version = Cli("--version");
  EXPECT_EQ(version.exit_code, 0);
  EXPECT_THAT(version.output, HasSubstr("0.1.0"));
  EXPECT_EQ(Cli("").exit_code, 1);
  EXPECT_EQ(Cli("frobnicate").exit_code, 1);
  EXPECT_EQ(Cli("--format yaml usage x").exit_code, 1);
}

TEST(Cli, ScanWritesRecordFile) {
  const fs::path out = FreshDir("scan");
  CliRun r = Cli("--out " + Q(out) + " scan " + Q(Fixture("listings/cre")) +
              " --project-id shop --snapshot-id v1");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  std::ifstream in(out / "shop@v1.records.json");
  ASSERT_TRUE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  EXPECT_EQ(j["projectId"], "shop");
  EXPECT_EQ(j["records"].size(), 1u);
}

TEST(Cli, EvolveFailOnCritical) {
  const fs::path out = FreshDir("evolve");
  ASSERT_EQ(Cli("--out " + Q(out) + " scan " + Q(Fixture("listings/evolution_v1")) +
                " --project-id tb --snapshot-id v1")
                .exit_code,
            0);
  ASSERT_EQ(Cli("--out " + Q(out) + " scan " + Q(Fixture("listings/evolution_v2")) +
                " --project-id tb --snapshot-id v2")
                .exit_code,
            0);
  const std::string files = Q(out / "tb@v1.records.json") + " " + Q(out / "tb@v2.records.json");
  CliRun plain = Cli("--format csv evolve " + files);
  EXPECT_EQ(plain.exit_code, 0) << plain.output;
  EXPECT_THAT(plain.output, HasSubstr("PreStrengthened,1,true"));
  EXPECT_EQ(Cli("evolve " + files + " --fail-on-critical").exit_code, 3);
  // Reversed, the change is a weakening and passes the gate.
  EXPECT_EQ(Cli("evolve " + Q(out / "tb@v2.records.json") + " " + Q(out / "tb@v1.records.json") +
                " --fail-on-critical")
                .exit_code,
            0);
}

TEST(Cli, UsageReadsRecordFiles) {
  const fs::path out = FreshDir("usage");
  ASSERT_EQ(Cli("--out " + Q(out) + " scan " + Q(Fixture("synthetic/src")) +
                " --project-id synth --jobs 4")
                .exit_code,
            0);
  CliRun r = Cli("--format json usage " + Q(out / "synth@HEAD.records.json"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  nlohmann::json j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["sections"][0]["projects"], 1);
  EXPECT_EQ(Cli("usage " + Q(out / "missing.json")).exit_code, 1);
}

TEST(Cli, LspReportsViolation) {
  CliRun r = Cli("--format json lsp " + Q(Fixture("listings/lsp")));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  nlohmann::json j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["violations"], 1);
}

TEST(Cli, CorpusIngestWritesManifest) {
  const fs::path dir = FreshDir("ingest");
  std::ofstream(dir / "list.txt") << "alpha https://github.com/a/alpha\nbeta https://example.org/b\n";
  std::ofstream(dir / "meta.json") << R"({"alpha": {"archived": false, "lastCommit": "2024-01-01",
    "languages": ["Java"], "tags": [{"name": "1.0", "date": "2020-01-01T00:00:00Z"},
    {"name": "2.0", "date": "2021-01-01T00:00:00Z"}]}})";
  CliRun r = Cli("--out " + Q(dir) + " corpus ingest --list " + Q(dir / "list.txt") + " --metadata " +
              Q(dir / "meta.json"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_THAT(r.output, HasSubstr("beta"));  // Excluded, with a diagnostic.
  std::ifstream in(dir / "manifest.json");
  ASSERT_TRUE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  ASSERT_EQ(j["projects"].size(), 1u);
  EXPECT_EQ(j["projects"][0]["version1Ref"], "1.0");
  EXPECT_EQ(j["projects"][0]["version2Ref"], "2.0");
}

}  // namespace
}  // namespace contractscan
