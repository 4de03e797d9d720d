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

// Thin helpers over the tree-sitter C API. Internal to the library.

#ifndef CONTRACTSCAN_SRC_TS_UTIL_H_
#define CONTRACTSCAN_SRC_TS_UTIL_H_

#include <tree_sitter/api.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "contractscan/text.h"

extern "C" const TSLanguage* tree_sitter_java();
extern "C" const TSLanguage* tree_sitter_kotlin();

namespace contractscan::ts {

struct ParserDeleter {
  void operator()(TSParser* p) const { ts_parser_delete(p); }
};
struct TreeDeleter {
  void operator()(TSTree* t) const { ts_tree_delete(t); }
};
using ParserPtr = std::unique_ptr<TSParser, ParserDeleter>;
using TreePtr = std::unique_ptr<TSTree, TreeDeleter>;

TreePtr Parse(const TSLanguage* language, std::string_view source);

inline std::string_view Type(TSNode n) { return ts_node_type(n); }
inline bool Is(TSNode n, std::string_view type) { return Type(n) == type; }
inline int Line(TSNode n) { return static_cast<int>(ts_node_start_point(n).row) + 1; }
inline int EndLine(TSNode n) { return static_cast<int>(ts_node_end_point(n).row) + 1; }

inline std::string_view Text(TSNode n, std::string_view src) {
  const uint32_t start = ts_node_start_byte(n);
  const uint32_t end = ts_node_end_byte(n);
  if (start >= src.size() || end <= start) return {};
  return src.substr(start, std::min<size_t>(end, src.size()) - start);
}
inline std::string Norm(TSNode n, std::string_view src) {
  return NormalizeWhitespace(Text(n, src));
}

bool IsComment(TSNode n);

// All children, named and anonymous.
std::vector<TSNode> Children(TSNode n);
// Named children other than comments.
std::vector<TSNode> NamedChildren(TSNode n);
TSNode Field(TSNode n, const char* name);
// First named child of the given type, or a null node.
TSNode FirstChildOfType(TSNode n, std::string_view type);
bool HasAnonymousChild(TSNode n, std::string_view token);

// Pre-order walk without recursion. `visit` returns false to skip the
// node's subtree.
template <typename Visit>
void Walk(TSNode root, Visit&& visit) {
  if (ts_node_is_null(root)) return;
  TSTreeCursor cursor = ts_tree_cursor_new(root);
  bool descend = visit(root);
  while (true) {
    if (descend && ts_tree_cursor_goto_first_child(&cursor)) {
      descend = visit(ts_tree_cursor_current_node(&cursor));
      continue;
    }
    bool moved = false;
    while (true) {
      if (ts_tree_cursor_goto_next_sibling(&cursor)) {
        moved = true;
        break;
      }
      if (!ts_tree_cursor_goto_parent(&cursor)) break;
    }
    if (!moved) break;
    descend = visit(ts_tree_cursor_current_node(&cursor));
  }
  ts_tree_cursor_delete(&cursor);
}

// Line of the first ERROR or MISSING node, or 0.
int FirstErrorLine(TSNode root);

}  // namespace contractscan::ts

#endif  // CONTRACTSCAN_SRC_TS_UTIL_H_
