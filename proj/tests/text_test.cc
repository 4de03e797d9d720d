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

#include "contractscan/text.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

namespace contractscan {
namespace {

using ::testing::ElementsAre;

TEST(NormalizeWhitespace, TrimsAndCollapses) {
  EXPECT_EQ(NormalizeWhitespace("  a \t\n  b  "), "a b");
  EXPECT_EQ(NormalizeWhitespace(""), "");
  EXPECT_EQ(NormalizeWhitespace(" \n "), "");
  EXPECT_EQ(NormalizeWhitespace("x>0&&y"), "x>0&&y");
}

TEST(NormalizeWhitespace, IsIdempotent) {
  for (const char* s : {" a  b ", "a\r\nb", "\tx ( y )\n"}) {
    const std::string once = NormalizeWhitespace(s);
    EXPECT_EQ(NormalizeWhitespace(once), once);
  }
}

TEST(SanitizeUtf8, DropsBomAndReplacesInvalidBytes) {
  EXPECT_EQ(SanitizeUtf8("\xEF\xBB\xBF" "class A"), "class A");
  EXPECT_EQ(SanitizeUtf8("a\xFF" "b"), "a\xEF\xBF\xBD" "b");
  // Overlong encoding of '/'.
  EXPECT_EQ(SanitizeUtf8("\xC0\xAF"), "\xEF\xBF\xBD\xEF\xBF\xBD");
  EXPECT_EQ(SanitizeUtf8("\xC3\xA9t\xC3\xA9"), "\xC3\xA9t\xC3\xA9");
  EXPECT_EQ(SanitizeUtf8("\xF0\x9F\x98\x80"), "\xF0\x9F\x98\x80");
}

TEST(CountPhysicalLines, CountsUnterminatedLastLine) {
  EXPECT_EQ(CountPhysicalLines(""), 0);
  EXPECT_EQ(CountPhysicalLines("a"), 1);
  EXPECT_EQ(CountPhysicalLines("a\n"), 1);
  EXPECT_EQ(CountPhysicalLines("a\nb"), 2);
  EXPECT_EQ(CountPhysicalLines("\n\n"), 2);
}

TEST(Split, KeepsOrSkipsEmptyPieces) {
  EXPECT_THAT(Split("a,,b", ','), ElementsAre("a", "", "b"));
  EXPECT_THAT(Split("a,,b", ',', true), ElementsAre("a", "b"));
  EXPECT_THAT(Split("", ','), ElementsAre(""));
  EXPECT_THAT(SplitAny("  a \t b\r", " \t\r"), ElementsAre("a", "b"));
  EXPECT_EQ(TrimWhitespace("  x y \n"), "x y");
  EXPECT_EQ(AsciiLower("GitHub.COM"), "github.com");
}

TEST(Segments, DottedNames) {
  EXPECT_THAT(SplitDotted("a.b.C"), ElementsAre("a", "b", "C"));
  EXPECT_EQ(LastSegment("a.b.C"), "C");
  EXPECT_EQ(LastSegment("C"), "C");
  EXPECT_EQ(DropLastSegment("a.b.C"), "a.b");
  EXPECT_EQ(DropLastSegment("C"), "");
  EXPECT_EQ(StripTypeArguments("List<String> "), "List");
  EXPECT_EQ(StripTypeArguments("Map<K, List<V>>"), "Map");
}

TEST(NaturalLess, ComparesDigitRunsNumerically) {
  EXPECT_TRUE(NaturalLess("v1.9", "v1.10"));
  EXPECT_FALSE(NaturalLess("v1.10", "v1.9"));
  EXPECT_TRUE(NaturalLess("release-2", "release-11"));
  EXPECT_TRUE(NaturalLess("a", "b"));
  EXPECT_FALSE(NaturalLess("v2", "v2"));
}

}  // namespace
}  // namespace contractscan
