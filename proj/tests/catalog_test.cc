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

#include "contractscan/catalog.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "test_util.h"

namespace contractscan {
namespace {

using ::contractscan::testing::DefaultCatalog;
using ::testing::HasSubstr;

TEST(Catalog, DefaultCountsPerCategory) {
  const Catalog& catalog = DefaultCatalog();
  EXPECT_EQ(catalog.CountBy(Category::kCre), 74u);
  EXPECT_EQ(catalog.CountBy(Category::kApi), 31u);
  EXPECT_EQ(catalog.CountBy(Category::kAssertion), 6u);
  EXPECT_EQ(catalog.CountBy(Category::kAnnotation), 136u);
  EXPECT_EQ(catalog.CountBy(Category::kOther), 1u);
  EXPECT_EQ(catalog.specs().size(), 248u);
}

TEST(Catalog, IdsAndMatchersAreUnique) {
  std::set<std::string> ids;
  std::set<std::string> matchers;
  for (const ConstructSpec& spec : DefaultCatalog().specs()) {
    EXPECT_TRUE(ids.insert(spec.id).second) << spec.id;
    EXPECT_TRUE(matchers.insert(spec.MatcherKey()).second) << spec.id;
    EXPECT_TRUE(spec.java || spec.kotlin) << spec.id;
  }
}

TEST(Catalog, Lookups) {
  const Catalog& catalog = DefaultCatalog();
  const ConstructSpec* cre = catalog.FindCre("IllegalArgumentException");
  ASSERT_NE(cre, nullptr);
  EXPECT_EQ(cre->id, "CREIllegalArgumentException");
  EXPECT_EQ(catalog.FindCre("RuntimeException"), nullptr);

  const ConstructSpec* guava =
      catalog.FindApi("com.google.common.base.Preconditions", "checkArgument");
  ASSERT_NE(guava, nullptr);
  EXPECT_EQ(guava->category, Category::kApi);
  EXPECT_EQ(catalog.FindApi("com.example.Preconditions", "checkArgument"), nullptr);
  EXPECT_TRUE(catalog.api_packages().contains("org.apache.commons.lang3"));

  const ConstructSpec* nonnull = catalog.FindAnnotation("androidx.annotation.NonNull");
  ASSERT_NE(nonnull, nullptr);
  EXPECT_EQ(nonnull->default_kind, DefaultKind::kSiteDependent);
  EXPECT_TRUE(catalog.IsAnnotationPackage("androidx.annotation"));
  EXPECT_FALSE(catalog.IsAnnotationPackage("androidx"));

  const ConstructSpec* java_assert =
      catalog.FindAssertion(AssertionForm::kStatement, "assert", Language::kJava);
  ASSERT_NE(java_assert, nullptr);
  EXPECT_EQ(java_assert->id, "JavaAssert");
  EXPECT_EQ(catalog.FindAssertion(AssertionForm::kCall, "require", Language::kJava), nullptr);
  EXPECT_NE(catalog.FindAssertion(AssertionForm::kCall, "require", Language::kKotlin), nullptr);
  EXPECT_THAT(catalog.KotlinAssertionNames(),
              ::testing::UnorderedElementsAre("assert", "check", "checkNotNull", "require",
                                              "requireNotNull"));
  EXPECT_NE(catalog.FindOther("contract-returns-implies"), nullptr);
}

TEST(Catalog, HashIsStableAndContentSensitive) {
  const std::string hash = DefaultCatalog().Hash();
  EXPECT_EQ(hash.size(), 16u);
  EXPECT_EQ(Catalog::LoadDefault()->Hash(), hash);

  std::vector<CatalogSource> one = {{"a.tsv", "CRE\tX\tcre\tjava\tXException\n"}};
  std::vector<CatalogSource> two = {{"a.tsv", "CRE\tY\tcre\tjava\tXException\n"}};
  EXPECT_NE(Catalog::FromSources(one)->Hash(), Catalog::FromSources(two)->Hash());
}

TEST(Catalog, ExtensionAddsEntries) {
  const std::string path = ::testing::TempDir() + "/extra_catalog.tsv";
  {
    std::ofstream out(path);
    out << "# comment\n\nCRE\tCREMyDomainException\tcre\tjava,kotlin\tMyDomainException\n";
  }
  absl::StatusOr<Catalog> catalog = Catalog::LoadExtended(std::vector<std::string>{path});
  ASSERT_TRUE(catalog.ok()) << catalog.status();
  EXPECT_EQ(catalog->CountBy(Category::kCre), 75u);
  EXPECT_NE(catalog->FindCre("MyDomainException"), nullptr);
}

TEST(Catalog, MissingExtensionFileFails) {
  absl::StatusOr<Catalog> catalog =
      Catalog::LoadExtended(std::vector<std::string>{"/nonexistent/catalog.tsv"});
  EXPECT_EQ(catalog.status().code(), absl::StatusCode::kNotFound);
}

struct BadCase {
  const char* name;
  const char* text;
  const char* message;
};

class MalformedCatalog : public ::testing::TestWithParam<BadCase> {};

TEST_P(MalformedCatalog, IsRejectedWithLocation) {
  std::vector<CatalogSource> sources = {{"bad.tsv", GetParam().text}};
  absl::StatusOr<Catalog> catalog = Catalog::FromSources(sources);
  ASSERT_FALSE(catalog.ok());
  EXPECT_THAT(std::string(catalog.status().message()), HasSubstr("bad.tsv"));
  EXPECT_THAT(std::string(catalog.status().message()), HasSubstr(GetParam().message));
}

INSTANTIATE_TEST_SUITE_P(
    Rows, MalformedCatalog,
    ::testing::Values(
        BadCase{"UnknownCategory", "Widget\tX\tg\tjava\tY\n", "unknown category"},
        BadCase{"UnknownLanguage", "CRE\tX\tcre\tcobol\tXException\n", "unknown language"},
        BadCase{"MissingMatcher", "CRE\tX\tcre\tjava\n", "fields"},
        BadCase{"BadQualifiedName", "API\tX\tg\tjava\tnot a class\tm\n",
                "malformed qualified name"},
        BadCase{"UnknownAssertionForm", "Assertion\tX\tg\tkotlin\tmacro\tcheck\n",
                "statement or call"},
        BadCase{"DuplicateId", "CRE\tX\tcre\tjava\tAException\nCRE\tX\tcre\tjava\tBException\n",
                "duplicate construct id"},
        BadCase{"DuplicateMatcher",
                "CRE\tX\tcre\tjava\tAException\nCRE\tY\tcre\tjava\tAException\n",
                "matches the same code"}),
    [](const ::testing::TestParamInfo<BadCase>& info) { return std::string(info.param.name); });

TEST(Catalog, DuplicateAgainstDefaultIsRejected) {
  const std::string path = ::testing::TempDir() + "/dup_catalog.tsv";
  {
    std::ofstream out(path);
    out << "CRE\tCREIllegalArgumentException\tcre\tjava\tOtherException\n";
  }
  absl::StatusOr<Catalog> catalog = Catalog::LoadExtended(std::vector<std::string>{path});
  EXPECT_EQ(catalog.status().code(), absl::StatusCode::kAlreadyExists);
}

}  // namespace
}  // namespace contractscan
