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

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "extractors.h"
#include "fmt/format.h"
#include "ts_util.h"

namespace contractscan::internal {
namespace {

using ts::Is;
using ts::NamedChildren;

bool IsTypeNode(TSNode n) {
  const std::string_view t = ts::Type(n);
  return t == "user_type" || t == "nullable_type" || t == "function_type" ||
         t == "parenthesized_type" || t == "non_nullable_type" ||
         t == "not_nullable_type" || t == "dynamic";
}

bool IsClassLike(TSNode n) {
  return Is(n, "class_declaration") || Is(n, "object_declaration") ||
         Is(n, "companion_object");
}

std::string Compact(std::string text) {
  std::erase(text, ' ');
  return text;
}

// Where an annotation lands, by syntactic position.
enum class Position { kParameter, kFunction, kProperty, kClassParameter, kType };

class KotlinExtractor {
 public:
  KotlinExtractor(std::string_view src, SourceUnit& unit) : src_(src), unit_(unit) {}

  void Run(TSNode root) {
    std::string stem = std::filesystem::path(unit_.path).stem().string();
    if (!stem.empty()) stem[0] = std::toupper(static_cast<unsigned char>(stem[0]));
    for (TSNode child : NamedChildren(root)) {
      if (Is(child, "package_header")) Package(child);
    }
    unit_.facade_class =
        unit_.package_name.empty() ? stem + "Kt" : fmt::format("{}.{}Kt", unit_.package_name, stem);
    for (TSNode child : NamedChildren(root)) TopLevel(child);
    if (script_init_.member) unit_.top_level_members.push_back(std::move(*script_init_.member));
    CollectFunctionNames(root);
  }

 private:
  // Gathers initializer blocks of one type into a synthetic member.
  struct Initializer {
    std::optional<MemberDecl> member;

    StatementTree& Add(TSNode block) {
      if (!member) {
        member.emplace();
        member->kind = MemberKind::kConstructor;
        member->name = "<init>";
        member->visibility = Visibility::kPrivate;
        member->is_initializer = true;
        member->line = ts::Line(block);
        member->body.emplace();
      }
      member->end_line = ts::EndLine(block);
      return *member->body;
    }
  };

  std::string Text(TSNode n) const { return std::string(ts::Text(n, src_)); }
  std::string Norm(TSNode n) const { return ts::Norm(n, src_); }

  void Package(TSNode n) {
    TSNode id = ts::FirstChildOfType(n, "identifier");
    if (!ts_node_is_null(id)) unit_.package_name = Compact(Norm(id));
  }

  void TopLevel(TSNode n) {
    if (Is(n, "package_header") || Is(n, "file_annotation") || Is(n, "shebang_line") ||
        Is(n, "type_alias")) {
      return;
    }
    if (Is(n, "import_list")) {
      for (TSNode c : NamedChildren(n)) TopLevel(c);
    } else if (Is(n, "import_header")) {
      Import(n);
    } else if (IsClassLike(n)) {
      unit_.types.push_back(Type(n, unit_.package_name));
    } else if (Is(n, "function_declaration")) {
      unit_.top_level_members.push_back(Function(n));
    } else if (Is(n, "property_declaration")) {
      unit_.top_level_members.push_back(Property(n));
    } else if (Is(n, "ERROR")) {
      for (TSNode c : NamedChildren(n)) TopLevel(c);
    } else {
      // Script statements (.kts) and recovered fragments.
      CollectStatements(n, script_init_.Add(n));
    }
  }

  void Import(TSNode n) {
    ImportDecl decl;
    for (TSNode c : NamedChildren(n)) {
      if (Is(c, "identifier")) {
        decl.qualified_name = Compact(Norm(c));
      } else if (Is(c, "wildcard_import")) {
        decl.is_wildcard = true;
      } else if (Is(c, "import_alias")) {
        for (TSNode a : NamedChildren(c)) decl.alias = Text(a);
      }
    }
    if (!decl.qualified_name.empty()) unit_.imports.push_back(std::move(decl));
  }

  // Maps an annotation at `position` with an optional use-site target onto
  // the site that decides its kind.
  static AnnotationSiteKind SiteFor(Position position, std::string_view target) {
    if (target == "get" || target == "set") return AnnotationSiteKind::kMethodOrReturn;
    if (target == "field" || target == "property" || target == "delegate") {
      return AnnotationSiteKind::kFieldOrProperty;
    }
    if (target == "setparam") return AnnotationSiteKind::kParameter;
    if (target == "param") {
      return position == Position::kProperty ? AnnotationSiteKind::kFieldOrProperty
                                             : AnnotationSiteKind::kParameter;
    }
    switch (position) {
      case Position::kParameter:
      case Position::kClassParameter:
        return AnnotationSiteKind::kParameter;
      case Position::kFunction:
        return AnnotationSiteKind::kMethodOrReturn;
      case Position::kProperty:
        return AnnotationSiteKind::kFieldOrProperty;
      case Position::kType:
        return AnnotationSiteKind::kTypeDecl;
    }
    return AnnotationSiteKind::kMethodOrReturn;
  }

  // Annotations directly under `holder` (modifiers, parameter_modifiers,
  // type_modifiers).
  std::vector<AnnotationUse> Annotations(TSNode holder, Position position,
                                         int parameter_index = -1) const {
    std::vector<AnnotationUse> out;
    if (ts_node_is_null(holder)) return out;
    for (TSNode a : NamedChildren(holder)) {
      if (!Is(a, "annotation")) continue;
      std::string target;
      std::vector<std::pair<TSNode, TSNode>> names;  // (user_type, value_arguments)
      for (TSNode c : NamedChildren(a)) {
        if (Is(c, "use_site_target")) {
          target = Compact(Norm(c));
          if (!target.empty() && target.back() == ':') target.pop_back();
        } else if (Is(c, "user_type")) {
          names.emplace_back(c, TSNode{});
        } else if (Is(c, "constructor_invocation")) {
          names.emplace_back(ts::FirstChildOfType(c, "user_type"),
                             ts::FirstChildOfType(c, "value_arguments"));
        }
      }
      if (target == "file") continue;
      for (const auto& [type, args] : names) {
        if (ts_node_is_null(type)) continue;
        AnnotationUse use;
        use.name_text = Compact(Norm(type));
        if (!ts_node_is_null(args)) use.arguments_text = Norm(args);
        use.use_site_target = target;
        use.site = SiteFor(position, target);
        use.parameter_index = use.site == AnnotationSiteKind::kParameter
                                  ? std::max(parameter_index, 0)
                                  : -1;
        use.line = ts::Line(a);
        out.push_back(std::move(use));
      }
    }
    return out;
  }

  static Visibility VisibilityOf(TSNode modifiers, std::string_view src) {
    if (ts_node_is_null(modifiers)) return Visibility::kPublic;
    for (TSNode c : NamedChildren(modifiers)) {
      if (!Is(c, "visibility_modifier")) continue;
      const std::string_view v = ts::Text(c, src);
      if (v == "private") return Visibility::kPrivate;
      if (v == "protected") return Visibility::kProtected;
      if (v == "internal") return Visibility::kInternal;
      return Visibility::kPublic;
    }
    return Visibility::kPublic;
  }

  bool HasModifier(TSNode modifiers, std::string_view kind, std::string_view word) const {
    if (ts_node_is_null(modifiers)) return false;
    for (TSNode c : NamedChildren(modifiers)) {
      if (Is(c, kind) && ts::Text(c, src_) == word) return true;
    }
    return false;
  }

  TypeKind KindOf(TSNode n, TSNode modifiers) const {
    if (Is(n, "object_declaration") || Is(n, "companion_object")) return TypeKind::kObject;
    if (ts::HasAnonymousChild(n, "interface")) return TypeKind::kInterface;
    if (ts::HasAnonymousChild(n, "enum") || HasModifier(modifiers, "class_modifier", "enum") ||
        !ts_node_is_null(ts::FirstChildOfType(n, "enum_class_body"))) {
      return TypeKind::kEnum;
    }
    if (HasModifier(modifiers, "class_modifier", "annotation")) return TypeKind::kAnnotation;
    return TypeKind::kClass;
  }

  void SuperTypes(TSNode n, TypeDecl& type) const {
    for (TSNode c : NamedChildren(n)) {
      if (Is(c, "delegation_specifiers")) {
        SuperTypes(c, type);
        continue;
      }
      if (!Is(c, "delegation_specifier")) continue;
      for (TSNode d : NamedChildren(c)) {
        TSNode t = d;
        if (Is(d, "constructor_invocation") || Is(d, "explicit_delegation")) {
          t = ts::FirstChildOfType(d, "user_type");
        }
        if (!ts_node_is_null(t) && IsTypeNode(t)) {
          type.super_types.push_back(Compact(Norm(t)));
          break;
        }
      }
    }
  }

  TypeDecl Type(TSNode n, std::string_view outer) {
    TypeDecl type;
    TSNode name = ts::FirstChildOfType(n, "type_identifier");
    if (!ts_node_is_null(name)) {
      type.name = Text(name);
    } else if (Is(n, "companion_object")) {
      type.name = "Companion";
    }
    type.qualified_name = outer.empty() ? type.name : fmt::format("{}.{}", outer, type.name);
    TSNode modifiers = ts::FirstChildOfType(n, "modifiers");
    type.kind = KindOf(n, modifiers);
    type.line = ts::Line(n);
    type.end_line = ts::EndLine(n);
    type.annotations = Annotations(modifiers, Position::kType);
    SuperTypes(n, type);

    TSNode primary = ts::FirstChildOfType(n, "primary_constructor");
    if (!ts_node_is_null(primary)) PrimaryConstructor(primary, type);

    Initializer init;
    for (TSNode c : NamedChildren(n)) {
      if (Is(c, "class_body") || Is(c, "enum_class_body")) Body(c, type, init);
    }
    if (init.member) type.members.push_back(std::move(*init.member));
    return type;
  }

  void PrimaryConstructor(TSNode n, TypeDecl& type) {
    MemberDecl ctor;
    ctor.kind = MemberKind::kConstructor;
    ctor.name = type.name;
    ctor.line = ts::Line(n);
    ctor.end_line = ts::EndLine(n);
    TSNode modifiers = ts::FirstChildOfType(n, "modifiers");
    ctor.visibility = VisibilityOf(modifiers, src_);
    ctor.annotations = Annotations(modifiers, Position::kFunction);
    ctor.body.emplace();

    std::vector<MemberDecl> properties;
    for (TSNode p : NamedChildren(n)) {
      if (!Is(p, "class_parameter")) continue;
      const int index = static_cast<int>(ctor.parameters.size());
      Parameter param;
      TSNode pmods = ts::FirstChildOfType(p, "modifiers");
      for (TSNode c : NamedChildren(p)) {
        if (Is(c, "simple_identifier") && param.name.empty()) {
          param.name = Text(c);
        } else if (IsTypeNode(c) && param.type_text.empty()) {
          param.type_text = Compact(Norm(c));
        } else if (!Is(c, "modifiers") && !Is(c, "binding_pattern_kind") &&
                   !Is(c, "simple_identifier")) {
          CollectStatements(c, *ctor.body);  // default value
        }
      }
      const bool is_property = !ts_node_is_null(ts::FirstChildOfType(p, "binding_pattern_kind"));
      std::vector<AnnotationUse> annotations =
          Annotations(pmods, Position::kClassParameter, index);
      MemberDecl property;
      if (is_property) {
        property.kind = MemberKind::kFieldOrProperty;
        property.name = param.name;
        property.visibility = VisibilityOf(pmods, src_);
        property.return_type_text = param.type_text;
        property.is_override = HasModifier(pmods, "member_modifier", "override");
        property.line = ts::Line(p);
        property.end_line = ts::EndLine(p);
      }
      for (AnnotationUse& a : annotations) {
        // Targeted annotations belong to the property the parameter declares.
        if (is_property && !a.use_site_target.empty() && a.use_site_target != "param") {
          if (a.site == AnnotationSiteKind::kParameter) a.parameter_index = 0;
          property.annotations.push_back(std::move(a));
        } else {
          a.site = AnnotationSiteKind::kParameter;
          a.parameter_index = index;
          param.annotations.push_back(std::move(a));
        }
      }
      ctor.parameters.push_back(std::move(param));
      if (is_property) properties.push_back(std::move(property));
    }
    type.members.push_back(std::move(ctor));
    for (MemberDecl& p : properties) type.members.push_back(std::move(p));
  }

  void Body(TSNode body, TypeDecl& type, Initializer& init) {
    for (TSNode c : NamedChildren(body)) {
      if (Is(c, "function_declaration")) {
        type.members.push_back(Function(c));
      } else if (Is(c, "property_declaration")) {
        type.members.push_back(Property(c));
      } else if (Is(c, "secondary_constructor")) {
        type.members.push_back(SecondaryConstructor(c, type));
      } else if (Is(c, "anonymous_initializer")) {
        CollectStatements(c, init.Add(c));
      } else if (IsClassLike(c)) {
        type.nested_types.push_back(Type(c, type.qualified_name));
      } else if (Is(c, "enum_entry")) {
        type.members.push_back(EnumEntry(c));
      } else if (Is(c, "ERROR")) {
        Body(c, type, init);
      }
    }
  }

  // Parameters of a function_value_parameters node. Annotations sit in a
  // parameter_modifiers sibling that precedes each parameter.
  std::vector<Parameter> Parameters(TSNode list, StatementTree* defaults) {
    std::vector<Parameter> out;
    if (ts_node_is_null(list)) return out;
    TSNode pending{};
    for (TSNode c : NamedChildren(list)) {
      if (Is(c, "parameter_modifiers")) {
        pending = c;
        continue;
      }
      if (!Is(c, "parameter")) {
        if (defaults != nullptr) CollectStatements(c, *defaults);
        continue;
      }
      const int index = static_cast<int>(out.size());
      Parameter param;
      for (TSNode pc : NamedChildren(c)) {
        if (Is(pc, "simple_identifier") && param.name.empty()) {
          param.name = Text(pc);
        } else if (IsTypeNode(pc) && param.type_text.empty()) {
          param.type_text = Compact(Norm(pc));
        }
      }
      if (!ts_node_is_null(pending)) {
        param.annotations = Annotations(pending, Position::kParameter, index);
        if (HasModifier(pending, "parameter_modifier", "vararg")) param.type_text += "...";
      }
      pending = TSNode{};
      out.push_back(std::move(param));
    }
    return out;
  }

  MemberDecl Function(TSNode n) {
    MemberDecl m;
    m.kind = MemberKind::kMethod;
    m.line = ts::Line(n);
    m.end_line = ts::EndLine(n);
    TSNode modifiers = ts::FirstChildOfType(n, "modifiers");
    m.visibility = VisibilityOf(modifiers, src_);
    m.is_override = HasModifier(modifiers, "member_modifier", "override");
    m.annotations = Annotations(modifiers, Position::kFunction);
    StatementTree body;
    bool after_params = false;
    for (TSNode c : NamedChildren(n)) {
      if (Is(c, "function_value_parameters")) {
        m.parameters = Parameters(c, &body);
        after_params = true;
      } else if (Is(c, "simple_identifier") && !after_params) {
        m.name = Text(c);
      } else if (IsTypeNode(c)) {
        if (after_params) {
          m.return_type_text = Compact(Norm(c));
        } else {
          m.receiver_type_text = Compact(Norm(c));
        }
      } else if (Is(c, "type_modifiers") && after_params) {
        for (AnnotationUse& a : Annotations(c, Position::kFunction)) {
          m.annotations.push_back(std::move(a));
        }
      } else if (Is(c, "function_body")) {
        CollectStatements(c, body);
      }
    }
    m.body = std::move(body);
    return m;
  }

  MemberDecl Property(TSNode n) {
    MemberDecl m;
    m.kind = MemberKind::kFieldOrProperty;
    m.line = ts::Line(n);
    m.end_line = ts::EndLine(n);
    TSNode modifiers = ts::FirstChildOfType(n, "modifiers");
    m.visibility = VisibilityOf(modifiers, src_);
    m.is_override = HasModifier(modifiers, "member_modifier", "override");
    m.annotations = Annotations(modifiers, Position::kProperty, 0);
    StatementTree body;
    for (TSNode c : NamedChildren(n)) {
      if (Is(c, "variable_declaration")) {
        for (TSNode v : NamedChildren(c)) {
          if (Is(v, "simple_identifier") && m.name.empty()) m.name = Text(v);
          if (IsTypeNode(v) && m.return_type_text.empty()) {
            m.return_type_text = Compact(Norm(v));
          }
        }
      } else if (Is(c, "multi_variable_declaration")) {
        m.name = Compact(Norm(c));
      } else if (IsTypeNode(c)) {
        m.receiver_type_text = Compact(Norm(c));
      } else if (Is(c, "getter") || Is(c, "setter")) {
        TSNode accessor_mods = ts::FirstChildOfType(c, "modifiers");
        for (AnnotationUse& a : Annotations(accessor_mods, Position::kFunction)) {
          m.annotations.push_back(std::move(a));
        }
        CollectStatements(c, body);
      } else if (!Is(c, "modifiers") && !Is(c, "binding_pattern_kind") &&
                 !Is(c, "type_parameters") && !Is(c, "type_constraints")) {
        CollectStatements(c, body);
      }
    }
    m.body = std::move(body);
    return m;
  }

  MemberDecl SecondaryConstructor(TSNode n, const TypeDecl& type) {
    MemberDecl m;
    m.kind = MemberKind::kConstructor;
    m.name = type.name;
    m.line = ts::Line(n);
    m.end_line = ts::EndLine(n);
    TSNode modifiers = ts::FirstChildOfType(n, "modifiers");
    m.visibility = VisibilityOf(modifiers, src_);
    m.annotations = Annotations(modifiers, Position::kFunction);
    StatementTree body;
    for (TSNode c : NamedChildren(n)) {
      if (Is(c, "function_value_parameters")) {
        m.parameters = Parameters(c, &body);
      } else if (!Is(c, "modifiers")) {
        CollectStatements(c, body);
      }
    }
    m.body = std::move(body);
    return m;
  }

  MemberDecl EnumEntry(TSNode n) {
    MemberDecl m;
    m.kind = MemberKind::kFieldOrProperty;
    m.visibility = Visibility::kPublic;
    m.line = ts::Line(n);
    m.end_line = ts::EndLine(n);
    m.annotations = Annotations(ts::FirstChildOfType(n, "modifiers"), Position::kProperty);
    StatementTree body;
    for (TSNode c : NamedChildren(n)) {
      if (Is(c, "simple_identifier") && m.name.empty()) {
        m.name = Text(c);
      } else if (!Is(c, "modifiers")) {
        CollectStatements(c, body);
      }
    }
    m.body = std::move(body);
    return m;
  }

  std::vector<std::string> Arguments(TSNode call_suffix) const {
    std::vector<std::string> out;
    TSNode args = ts::FirstChildOfType(call_suffix, "value_arguments");
    if (ts_node_is_null(args)) return out;
    for (TSNode a : NamedChildren(args)) out.push_back(Norm(a));
    return out;
  }

  // Splits a call's function expression into (receiver, callee). Returns
  // false for callees that are neither names nor member accesses.
  bool Callee(TSNode fn, std::string& receiver, std::string& callee) const {
    if (Is(fn, "simple_identifier")) {
      callee = Text(fn);
      return true;
    }
    if (!Is(fn, "navigation_expression")) return false;
    std::vector<TSNode> parts = NamedChildren(fn);
    if (parts.size() < 2 || !Is(parts.back(), "navigation_suffix")) return false;
    TSNode name = ts::FirstChildOfType(parts.back(), "simple_identifier");
    if (ts_node_is_null(name)) return false;
    callee = Text(name);
    const uint32_t start = ts_node_start_byte(fn);
    const uint32_t end = ts_node_start_byte(parts.back());
    receiver = Compact(NormalizeWhitespace(src_.substr(start, end - start)));
    return true;
  }

  ThrowStatement Throw(TSNode n) const {
    ThrowStatement t;
    t.line = ts::Line(n);
    std::vector<TSNode> children = NamedChildren(n);
    if (children.empty() || !Is(children.front(), "call_expression")) return t;
    TSNode call = children.front();
    std::vector<TSNode> parts = NamedChildren(call);
    if (parts.size() < 2 || !Is(parts.back(), "call_suffix")) return t;
    std::string receiver, callee;
    if (!Callee(parts.front(), receiver, callee)) return t;
    t.exception_type = receiver.empty() ? callee : fmt::format("{}.{}", receiver, callee);
    t.arguments = Arguments(parts.back());
    return t;
  }

  static bool IsThrow(TSNode n) {
    return Is(n, "jump_expression") && ts::HasAnonymousChild(n, "throw");
  }

  Branch BranchOf(TSNode body) const {
    Branch b;
    const bool braced = ts::HasAnonymousChild(body, "{");
    std::vector<TSNode> stmts;
    if (braced) {
      TSNode list = ts::FirstChildOfType(body, "statements");
      if (!ts_node_is_null(list)) stmts = NamedChildren(list);
    } else {
      stmts = NamedChildren(body);
    }
    b.statement_count = static_cast<int>(stmts.size());
    if (stmts.size() == 1 && IsThrow(stmts.front())) b.sole_throw = Throw(stmts.front());
    return b;
  }

  IfStatement If(TSNode n) const {
    IfStatement s;
    s.line = ts::Line(n);
    bool seen_open = false, seen_else = false, have_condition = false, have_then = false;
    for (TSNode c : ts::Children(n)) {
      if (ts::IsComment(c)) continue;
      if (!ts_node_is_named(c)) {
        if (ts::Type(c) == "(") seen_open = true;
        if (ts::Type(c) == "else") seen_else = true;
        continue;
      }
      if (Is(c, "control_structure_body")) {
        if (seen_else) {
          s.else_branch = BranchOf(c);
        } else if (!have_then) {
          s.then_branch = BranchOf(c);
          have_then = true;
        }
      } else if (seen_open && !have_condition) {
        s.condition = Norm(c);
        have_condition = true;
      }
    }
    if (seen_else && !s.else_branch) s.else_branch = Branch{};
    return s;
  }

  ContractBlock Contract(TSNode lambda, int line) const {
    ContractBlock block;
    block.line = line;
    ts::Walk(lambda, [&](TSNode n) {
      if (!Is(n, "infix_expression")) return true;
      std::vector<TSNode> parts = NamedChildren(n);
      if (parts.size() != 3 || !Is(parts[1], "simple_identifier") ||
          ts::Text(parts[1], src_) != "implies" || !Is(parts[0], "call_expression")) {
        return true;
      }
      std::vector<TSNode> call = NamedChildren(parts[0]);
      if (call.empty() || !Is(call.front(), "simple_identifier")) return true;
      const std::string_view fn = ts::Text(call.front(), src_);
      if (fn != "returns" && fn != "returnsNotNull") return true;
      block.effects.push_back({Norm(parts[0]), Norm(parts[2])});
      return false;
    });
    return block;
  }

  void CollectStatements(TSNode root, StatementTree& out) const {
    // Inner calls of `f(args) { lambda }`; the outer node carries the lambda.
    std::set<const void*> trailing_inner;
    ts::Walk(root, [&](TSNode n) {
      const std::string_view type = ts::Type(n);
      if (type == "if_expression") {
        out.ifs.push_back(If(n));
      } else if (type == "jump_expression") {
        if (IsThrow(n)) out.throws.push_back(Throw(n));
      } else if (type == "call_expression") {
        std::vector<TSNode> parts = NamedChildren(n);
        if (parts.size() < 2 || !Is(parts.back(), "call_suffix")) return true;
        const bool lambda =
            !ts_node_is_null(ts::FirstChildOfType(parts.back(), "annotated_lambda"));
        if (Is(parts.front(), "call_expression")) {
          if (lambda) trailing_inner.insert(parts.front().id);
          return true;
        }
        CallExpression call;
        if (!Callee(parts.front(), call.receiver, call.callee)) return true;
        call.line = ts::Line(n);
        call.arguments = Arguments(parts.back());
        call.has_trailing_lambda = lambda || trailing_inner.contains(n.id);
        if (call.callee == "contract" && call.receiver.empty() && lambda) {
          ContractBlock block =
              Contract(ts::FirstChildOfType(parts.back(), "annotated_lambda"), call.line);
          if (!block.effects.empty()) out.contract_blocks.push_back(std::move(block));
        }
        out.calls.push_back(std::move(call));
      }
      return true;
    });
  }

  void CollectFunctionNames(TSNode root) {
    std::set<std::string> names;
    ts::Walk(root, [&](TSNode n) {
      if (Is(n, "function_declaration")) {
        for (TSNode c : NamedChildren(n)) {
          if (Is(c, "function_value_parameters")) break;
          if (Is(c, "simple_identifier")) names.insert(Text(c));
        }
      }
      return true;
    });
    unit_.declared_function_names.assign(names.begin(), names.end());
  }

  std::string_view src_;
  SourceUnit& unit_;
  Initializer script_init_;
};

}  // namespace

void ExtractKotlin(TSNode root, std::string_view src, SourceUnit& unit) {
  KotlinExtractor(src, unit).Run(root);
}

}  // namespace contractscan::internal
