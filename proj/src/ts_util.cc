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

#include "ts_util.h"

#include <cstring>

namespace contractscan::ts {

TreePtr Parse(const TSLanguage* language, std::string_view source) {
  // Parsers are cheap relative to a parse and are not thread-safe, so each
  // call owns one.
  ParserPtr parser(ts_parser_new());
  ts_parser_set_language(parser.get(), language);
  return TreePtr(ts_parser_parse_string(parser.get(), nullptr, source.data(),
                                        static_cast<uint32_t>(source.size())));
}

bool IsComment(TSNode n) {
  const std::string_view type = Type(n);
  return type == "comment" || type == "line_comment" ||
         type == "block_comment" || type == "multiline_comment";
}

std::vector<TSNode> Children(TSNode n) {
  std::vector<TSNode> out;
  const uint32_t count = ts_node_child_count(n);
  out.reserve(count);
  for (uint32_t i = 0; i < count; ++i) out.push_back(ts_node_child(n, i));
  return out;
}

std::vector<TSNode> NamedChildren(TSNode n) {
  std::vector<TSNode> out;
  const uint32_t count = ts_node_named_child_count(n);
  out.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    TSNode child = ts_node_named_child(n, i);
    if (!IsComment(child)) out.push_back(child);
  }
  return out;
}

TSNode Field(TSNode n, const char* name) {
  return ts_node_child_by_field_name(n, name, static_cast<uint32_t>(std::strlen(name)));
}

TSNode FirstChildOfType(TSNode n, std::string_view type) {
  const uint32_t count = ts_node_named_child_count(n);
  for (uint32_t i = 0; i < count; ++i) {
    TSNode child = ts_node_named_child(n, i);
    if (Type(child) == type) return child;
  }
  return TSNode{};
}

bool HasAnonymousChild(TSNode n, std::string_view token) {
  const uint32_t count = ts_node_child_count(n);
  for (uint32_t i = 0; i < count; ++i) {
    TSNode child = ts_node_child(n, i);
    if (!ts_node_is_named(child) && Type(child) == token) return true;
  }
  return false;
}

int FirstErrorLine(TSNode root) {
  int line = 0;
  Walk(root, [&](TSNode n) {
    if (line != 0) return false;
    if (!ts_node_has_error(n)) return false;
    if (ts_node_is_error(n) || ts_node_is_missing(n)) {
      line = Line(n);
      return false;
    }
    return true;
  });
  return line;
}

}  // namespace contractscan::ts
