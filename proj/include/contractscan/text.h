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

#ifndef CONTRACTSCAN_TEXT_H_
#define CONTRACTSCAN_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace contractscan {

// Trims the ends and collapses every internal whitespace run to one space.
std::string NormalizeWhitespace(std::string_view text);

// Returns valid UTF-8: a leading BOM is dropped and each invalid byte
// becomes U+FFFD.
std::string SanitizeUtf8(std::string_view bytes);

// Physical lines, counting a final unterminated line.
int CountPhysicalLines(std::string_view bytes);

// Pieces between separators; views into `text`.
std::vector<std::string_view> Split(std::string_view text, char separator,
                                    bool skip_empty = false);
// Non-empty pieces between any of `separators`.
std::vector<std::string_view> SplitAny(std::string_view text, std::string_view separators);
std::string_view TrimWhitespace(std::string_view text);
std::string AsciiLower(std::string_view text);

std::vector<std::string> SplitDotted(std::string_view qualified);
std::string_view LastSegment(std::string_view qualified);
// Everything before the last '.', or empty.
std::string_view DropLastSegment(std::string_view qualified);

// Removes a trailing generic argument list: "List<String>" -> "List".
std::string_view StripTypeArguments(std::string_view type_text);

// Natural ordering: digit runs compare numerically ("v1.10" > "v1.9").
bool NaturalLess(std::string_view a, std::string_view b);

}  // namespace contractscan

#endif  // CONTRACTSCAN_TEXT_H_
