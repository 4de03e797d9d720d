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

#include "contractscan/classification.h"

#include <gtest/gtest.h>

#include <map>

#include "test_util.h"

namespace contractscan {
namespace {

using ::contractscan::testing::Detect;

TEST(Classify, SiteDependentAnnotations) {
  ConstructSpec spec;
  spec.category = Category::kAnnotation;
  spec.default_kind = DefaultKind::kSiteDependent;
  EXPECT_EQ(Classify(spec, OccurrenceSite::kParameter), ContractKind::kPre);
  EXPECT_EQ(Classify(spec, OccurrenceSite::kMethodOrReturn), ContractKind::kPost);
  EXPECT_EQ(Classify(spec, OccurrenceSite::kFieldOrProperty), ContractKind::kInvariant);
  EXPECT_EQ(Classify(spec, OccurrenceSite::kTypeDecl), ContractKind::kInvariant);
  EXPECT_EQ(Classify(spec, OccurrenceSite::kStatement), ContractKind::kUnclassified);
}

TEST(Classify, FixedDefaultsIgnoreSite) {
  ConstructSpec spec;
  spec.default_kind = DefaultKind::kPre;
  for (OccurrenceSite site : {OccurrenceSite::kStatement, OccurrenceSite::kParameter,
                              OccurrenceSite::kFieldOrProperty}) {
    EXPECT_EQ(Classify(spec, site), ContractKind::kPre);
  }
  spec.default_kind = DefaultKind::kUnclassified;
  EXPECT_EQ(Classify(spec, OccurrenceSite::kParameter), ContractKind::kUnclassified);
}

TEST(Classify, DefaultCatalogKinds) {
  for (const ConstructSpec& spec : contractscan::testing::DefaultCatalog().specs()) {
    switch (spec.category) {
      case Category::kCre:
      case Category::kApi:
        EXPECT_EQ(spec.default_kind, DefaultKind::kPre) << spec.id;
        break;
      case Category::kAnnotation:
        EXPECT_EQ(spec.default_kind, DefaultKind::kSiteDependent) << spec.id;
        break;
      case Category::kAssertion:
      case Category::kOther:
        EXPECT_EQ(spec.default_kind, DefaultKind::kUnclassified) << spec.id;
        break;
    }
  }
}

TEST(Classify, SiteOfCoversEveryAnnotationSite) {
  EXPECT_EQ(SiteOf(AnnotationSiteKind::kParameter), OccurrenceSite::kParameter);
  EXPECT_EQ(SiteOf(AnnotationSiteKind::kMethodOrReturn), OccurrenceSite::kMethodOrReturn);
  EXPECT_EQ(SiteOf(AnnotationSiteKind::kFieldOrProperty), OccurrenceSite::kFieldOrProperty);
  EXPECT_EQ(SiteOf(AnnotationSiteKind::kTypeDecl), OccurrenceSite::kTypeDecl);
}

// Parameter, method and field annotations in both languages land on Pre,
// Post and Invariant respectively.
TEST(Classify, AnnotationSitesEndToEnd) {
  std::vector<ContractRecord> java = Detect("Sites.java", R"(package s;
import androidx.annotation.NonNull;
import androidx.annotation.Nullable;
class Sites {
  @NonNull private String field;
  @Nullable String method(@NonNull String a, @NonNull String b) { return null; }
}
)");
  std::vector<ContractRecord> kotlin = Detect("Sites.kt", R"(package s
import androidx.annotation.NonNull
import androidx.annotation.Nullable
class Sites {
  @NonNull var field: String = ""
  @Nullable fun method(@NonNull a: String): String? = null
}
)");
  for (const auto* records : {&java, &kotlin}) {
    std::map<ArtifactKind, std::map<ContractKind, int>> by_site;
    for (const ContractRecord& r : *records) {
      ASSERT_EQ(r.category, Category::kAnnotation);
      if (r.parameter_index) {
        EXPECT_EQ(r.kind, ContractKind::kPre);
      } else if (r.artifact_kind == ArtifactKind::kFieldOrProperty) {
        EXPECT_EQ(r.kind, ContractKind::kInvariant);
      } else {
        EXPECT_EQ(r.artifact_kind, ArtifactKind::kMethod);
        EXPECT_EQ(r.kind, ContractKind::kPost);
      }
      ++by_site[r.artifact_kind][r.kind];
    }
    EXPECT_EQ(by_site[ArtifactKind::kFieldOrProperty][ContractKind::kInvariant], 1);
    EXPECT_EQ(by_site[ArtifactKind::kMethod][ContractKind::kPost], 1);
    EXPECT_GE(by_site[ArtifactKind::kMethod][ContractKind::kPre], 1);
  }
  EXPECT_EQ(java.size(), 4u);
  EXPECT_EQ(kotlin.size(), 3u);
}

}  // namespace
}  // namespace contractscan
