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

#include "contractscan/inheritance.h"

#include <deque>
#include <map>
#include <set>
#include <utility>

#include "contractscan/text.h"
#include "fmt/format.h"

namespace contractscan {
namespace {

struct TypeRef {
  const SourceUnit* unit;
  const TypeDecl* type;
  std::vector<std::string> enclosing;  // Outermost first, excluding `type`.
};

// "Map<K, V>.Entry<X>" -> "Map.Entry".
std::string EraseTypeArguments(std::string_view text) {
  std::string out;
  int depth = 0;
  for (char c : text) {
    if (c == '<') {
      ++depth;
    } else if (c == '>') {
      if (depth > 0) --depth;
    } else if (depth == 0 && c != ' ' && c != '?') {
      out.push_back(c);
    }
  }
  return out;
}

size_t CommonDirPrefix(std::string_view a, std::string_view b) {
  size_t common = 0;
  for (size_t i = 0; i < a.size() && i < b.size() && a[i] == b[i]; ++i) {
    if (a[i] == '/') common = i + 1;
  }
  return common;
}

class HierarchyIndex {
 public:
  explicit HierarchyIndex(std::span<const SourceUnit> units) {
    for (const SourceUnit& unit : units) {
      for (const TypeDecl& t : unit.types) Add(unit, t, {});
    }
  }

  const std::vector<TypeRef>& refs() const { return refs_; }

  // Declaration of `qualified` closest to `from`, or null.
  const TypeRef* Closest(const std::string& qualified, const SourceUnit& from) const {
    auto it = by_name_.find(qualified);
    if (it == by_name_.end()) return nullptr;
    const TypeRef* best = nullptr;
    size_t best_common = 0;
    for (size_t idx : it->second) {
      const TypeRef& r = refs_[idx];
      const size_t common =
          r.unit == &from ? std::string::npos : CommonDirPrefix(r.unit->path, from.path);
      if (best == nullptr || common > best_common ||
          (common == best_common && r.unit->path < best->unit->path)) {
        best = &r;
        best_common = common;
      }
    }
    return best;
  }

  bool Has(const std::string& qualified) const { return by_name_.contains(qualified); }

  std::optional<std::string> Resolve(std::string_view written, const TypeRef& sub) const {
    const std::string text = EraseTypeArguments(written);
    if (text.empty()) return std::nullopt;
    auto accept = [&](const std::string& q) -> std::optional<std::string> {
      if (q == sub.type->qualified_name || !Has(q)) return std::nullopt;
      return q;
    };
    const size_t dot = text.find('.');
    if (dot != std::string::npos) {
      if (auto q = accept(text)) return q;
      const std::string head = text.substr(0, dot);
      if (auto q = ResolveSimple(head, sub, /*allow_self=*/true)) {
        if (auto full = accept(fmt::format("{}{}", *q, text.substr(dot)))) return full;
      }
      return std::nullopt;
    }
    return ResolveSimple(text, sub, /*allow_self=*/false);
  }

 private:
  void Add(const SourceUnit& unit, const TypeDecl& type, std::vector<std::string> enclosing) {
    by_name_[type.qualified_name].push_back(refs_.size());
    refs_.push_back({&unit, &type, enclosing});
    enclosing.push_back(type.qualified_name);
    for (const TypeDecl& nested : type.nested_types) Add(unit, nested, enclosing);
  }

  std::optional<std::string> ResolveSimple(const std::string& name, const TypeRef& sub,
                                           bool allow_self) const {
    const SourceUnit& unit = *sub.unit;
    auto accept = [&](const std::string& q) -> std::optional<std::string> {
      if ((!allow_self && q == sub.type->qualified_name) || !Has(q)) return std::nullopt;
      return q;
    };
    for (const ImportDecl& imp : unit.imports) {
      if (imp.is_wildcard || imp.is_static || imp.BoundName() != name) continue;
      if (auto q = accept(imp.qualified_name)) return q;
    }
    if (auto q = accept(unit.package_name.empty() ? name
                                                  : fmt::format("{}.{}", unit.package_name, name))) {
      return q;
    }
    // Innermost enclosing scope first, then any type of the file.
    std::vector<std::string> scopes = sub.enclosing;
    scopes.push_back(sub.type->qualified_name);
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
      if (auto q = accept(fmt::format("{}.{}", *it, name))) return q;
    }
    for (const TypeRef& r : refs_) {
      if (r.unit == &unit && r.type->name == name && r.type != sub.type) {
        return r.type->qualified_name;
      }
    }
    for (const ImportDecl& imp : unit.imports) {
      if (!imp.is_wildcard) continue;
      if (auto q = accept(fmt::format("{}.{}", imp.qualified_name, name))) return q;
    }
    return std::nullopt;
  }

  std::vector<TypeRef> refs_;
  std::map<std::string, std::vector<size_t>> by_name_;
};

using Node = std::pair<std::string, std::string>;  // (file, qualified name)

bool Overridable(const MemberDecl& m) {
  return m.kind == MemberKind::kMethod && !m.is_static && !m.is_initializer &&
         m.visibility != Visibility::kPrivate;
}

// Signature without the owner.
std::pair<std::string, std::vector<std::string>> Signature(const MemberDecl& m) {
  MemberKey key = KeyOf("", m);
  return {key.member_name, key.parameter_types};
}

}  // namespace

std::vector<HierarchyEdge> ResolveHierarchy(std::span<const SourceUnit> units) {
  const HierarchyIndex index(units);
  std::vector<HierarchyEdge> edges;
  for (const TypeRef& ref : index.refs()) {
    for (const std::string& written : ref.type->super_types) {
      HierarchyEdge e;
      e.sub_class = ref.type->qualified_name;
      e.super_type_text = written;
      e.sub_file = ref.unit->path;
      if (std::optional<std::string> q = index.Resolve(written, ref)) {
        const TypeRef* target = index.Closest(*q, *ref.unit);
        e.resolved_super = *q;
        e.super_file = target->unit->path;
      }
      edges.push_back(std::move(e));
    }
  }
  return edges;
}

LspReport LspDiffRecords(std::span<const SourceUnit> units, const SnapshotReport& report) {
  LspReport out;
  const HierarchyIndex index(units);

  std::map<Node, std::vector<Node>> supers;
  for (const HierarchyEdge& e : ResolveHierarchy(units)) {
    if (!e.resolved_super) {
      ++out.unresolved_edges;
      continue;
    }
    ++out.resolved_edges;
    supers[{e.sub_file, e.sub_class}].push_back({e.super_file, *e.resolved_super});
  }

  std::map<Node, const TypeDecl*> types;
  for (const TypeRef& r : index.refs()) types.emplace(Node{r.unit->path, r.type->qualified_name}, r.type);

  std::map<std::pair<std::string, MemberKey>, std::vector<ContractRecord>> contracts;
  const std::vector<std::optional<size_t>> links = LinkRecords(report);
  for (size_t i = 0; i < report.records.size(); ++i) {
    if (!links[i]) continue;
    const MemberInfo& m = report.members[*links[i]];
    contracts[{m.file_path, m.key}].push_back(report.records[i]);
  }
  auto contracts_of = [&](const std::string& file, const MemberKey& key) {
    auto it = contracts.find({file, key});
    return it == contracts.end() ? std::vector<ContractRecord>{} : it->second;
  };

  for (const TypeRef& ref : index.refs()) {
    const Node sub_node{ref.unit->path, ref.type->qualified_name};
    if (!supers.contains(sub_node)) continue;
    for (const MemberDecl& m : ref.type->members) {
      if (!Overridable(m)) continue;
      const auto sig = Signature(m);

      // Breadth-first, supertypes in declaration order; first hit is nearest.
      std::deque<Node> queue(supers[sub_node].begin(), supers[sub_node].end());
      std::set<Node> seen(queue.begin(), queue.end());
      seen.insert(sub_node);
      std::optional<std::pair<Node, const MemberDecl*>> found;
      while (!queue.empty() && !found) {
        const Node node = queue.front();
        queue.pop_front();
        auto t = types.find(node);
        if (t == types.end()) continue;
        for (const MemberDecl& candidate : t->second->members) {
          if (Overridable(candidate) && Signature(candidate) == sig) {
            found.emplace(node, &candidate);
            break;
          }
        }
        if (auto s = supers.find(node); s != supers.end()) {
          for (const Node& next : s->second) {
            if (seen.insert(next).second) queue.push_back(next);
          }
        }
      }
      if (!found) continue;
      ++out.override_pairs;

      const auto& [super_node, super_member] = *found;
      OverridePair pair;
      pair.diff.key = KeyOf(ref.type->qualified_name, m);
      pair.super_key = KeyOf(super_node.second, *super_member);
      pair.diff.before = contracts_of(super_node.first, pair.super_key);
      pair.diff.after = contracts_of(sub_node.first, pair.diff.key);
      if (pair.diff.before.empty() && pair.diff.after.empty()) continue;
      pair.diff.classifications = ClassifyDiff(pair.diff.before, pair.diff.after);
      pair.sub_file = sub_node.first;
      pair.sub_line = m.line;
      pair.super_file = super_node.first;
      pair.super_line = super_member->line;
      for (const Classification& c : pair.diff.classifications) {
        if (IsCritical(c.pattern)) pair.violation = true;
      }
      out.pairs.push_back(std::move(pair));
    }
  }
  return out;
}

}  // namespace contractscan
