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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extractors.h"
#include "fmt/format.h"
#include "ts_util.h"

namespace contractscan::internal {
namespace {

using ts::Field;
using ts::Is;
using ts::NamedChildren;

bool IsTypeDeclaration(TSNode n) {
  return Is(n, "class_declaration") || Is(n, "interface_declaration") ||
         Is(n, "enum_declaration") || Is(n, "record_declaration") ||
         Is(n, "annotation_type_declaration");
}

TypeKind KindOf(TSNode n) {
  if (Is(n, "interface_declaration")) return TypeKind::kInterface;
  if (Is(n, "enum_declaration")) return TypeKind::kEnum;
  if (Is(n, "record_declaration")) return TypeKind::kRecord;
  if (Is(n, "annotation_type_declaration")) return TypeKind::kAnnotation;
  return TypeKind::kClass;
}

// Collects initializer blocks of one type into a synthetic member.
struct InitializerAccumulator {
  std::optional<MemberDecl> member;

  void Add(std::string_view name, bool is_static, TSNode block, StatementTree body) {
    if (!member) {
      member.emplace();
      member->kind = MemberKind::kConstructor;
      member->name = std::string(name);
      member->visibility = Visibility::kPrivate;
      member->is_static = is_static;
      member->is_initializer = true;
      member->line = ts::Line(block);
      member->body.emplace();
    }
    member->end_line = ts::EndLine(block);
    StatementTree& into = *member->body;
    auto append = [](auto& to, auto& from) {
      to.insert(to.end(), std::make_move_iterator(from.begin()),
                std::make_move_iterator(from.end()));
    };
    append(into.ifs, body.ifs);
    append(into.throws, body.throws);
    append(into.calls, body.calls);
    append(into.asserts, body.asserts);
  }
};

class JavaExtractor {
 public:
  JavaExtractor(std::string_view src, SourceUnit& unit) : src_(src), unit_(unit) {}

  void Run(TSNode root) {
    for (TSNode child : NamedChildren(root)) TopLevel(child);
  }

 private:
  std::string Text(TSNode n) const { return std::string(ts::Text(n, src_)); }
  std::string Norm(TSNode n) const { return ts::Norm(n, src_); }

  void TopLevel(TSNode n) {
    if (Is(n, "package_declaration")) {
      for (TSNode c : NamedChildren(n)) {
        if (Is(c, "identifier") || Is(c, "scoped_identifier")) {
          unit_.package_name = Norm(c);
        }
      }
    } else if (Is(n, "import_declaration")) {
      Import(n);
    } else if (IsTypeDeclaration(n)) {
      unit_.types.push_back(Type(n, unit_.package_name));
    } else if (Is(n, "ERROR")) {
      for (TSNode c : NamedChildren(n)) TopLevel(c);
    }
  }

  void Import(TSNode n) {
    ImportDecl decl;
    decl.is_static = ts::HasAnonymousChild(n, "static");
    for (TSNode c : NamedChildren(n)) {
      if (Is(c, "identifier") || Is(c, "scoped_identifier")) {
        decl.qualified_name = Norm(c);
      } else if (Is(c, "asterisk")) {
        decl.is_wildcard = true;
      }
    }
    std::erase(decl.qualified_name, ' ');
    if (!decl.qualified_name.empty()) unit_.imports.push_back(std::move(decl));
  }

  std::vector<AnnotationUse> Annotations(TSNode modifiers, AnnotationSiteKind site,
                                         int parameter_index = -1) const {
    std::vector<AnnotationUse> out;
    if (ts_node_is_null(modifiers)) return out;
    for (TSNode c : NamedChildren(modifiers)) {
      if (!Is(c, "marker_annotation") && !Is(c, "annotation")) continue;
      AnnotationUse use;
      use.name_text = Norm(Field(c, "name"));
      std::erase(use.name_text, ' ');
      TSNode args = Field(c, "arguments");
      if (!ts_node_is_null(args)) use.arguments_text = Norm(args);
      use.site = site;
      use.parameter_index = parameter_index;
      use.line = ts::Line(c);
      out.push_back(std::move(use));
    }
    return out;
  }

  static Visibility VisibilityOf(TSNode modifiers, Visibility fallback) {
    if (ts_node_is_null(modifiers)) return fallback;
    if (ts::HasAnonymousChild(modifiers, "public")) return Visibility::kPublic;
    if (ts::HasAnonymousChild(modifiers, "protected")) return Visibility::kProtected;
    if (ts::HasAnonymousChild(modifiers, "private")) return Visibility::kPrivate;
    return fallback;
  }

  // `implicit_visibility` applies when the declaration has no access modifier.
  TypeDecl Type(TSNode n, std::string_view outer,
                Visibility implicit_visibility = Visibility::kPackagePrivate) {
    TypeDecl type;
    type.name = Text(Field(n, "name"));
    type.qualified_name = outer.empty() ? type.name : fmt::format("{}.{}", outer, type.name);
    type.kind = KindOf(n);
    type.line = ts::Line(n);
    type.end_line = ts::EndLine(n);
    type.annotations = Annotations(ts::FirstChildOfType(n, "modifiers"),
                                   AnnotationSiteKind::kTypeDecl);

    TSNode superclass = Field(n, "superclass");
    if (!ts_node_is_null(superclass)) {
      for (TSNode t : NamedChildren(superclass)) type.super_types.push_back(Norm(t));
    }
    for (TSNode c : NamedChildren(n)) {
      if (!Is(c, "super_interfaces") && !Is(c, "extends_interfaces")) continue;
      for (TSNode list : NamedChildren(c)) {
        if (!Is(list, "type_list")) continue;
        for (TSNode t : NamedChildren(list)) type.super_types.push_back(Norm(t));
      }
    }

    std::optional<std::vector<Parameter>> saved = std::move(record_header_);
    const bool saved_compact = has_compact_ctor_;
    record_header_.reset();
    has_compact_ctor_ = false;
    if (type.kind == TypeKind::kRecord) {
      TSNode header = Field(n, "parameters");
      if (!ts_node_is_null(header)) record_header_ = Parameters(header);
    }
    InitializerAccumulator instance_init, static_init;
    TSNode body = Field(n, "body");
    if (!ts_node_is_null(body)) Body(body, type, instance_init, static_init);
    if (type.kind == TypeKind::kRecord) {
      RecordHeader(n, type,
                   VisibilityOf(ts::FirstChildOfType(n, "modifiers"), implicit_visibility));
    }
    record_header_ = std::move(saved);
    has_compact_ctor_ = saved_compact;
    if (instance_init.member) type.members.push_back(std::move(*instance_init.member));
    if (static_init.member) type.members.push_back(std::move(*static_init.member));
    return type;
  }

  void Body(TSNode body, TypeDecl& type, InitializerAccumulator& instance_init,
            InitializerAccumulator& static_init) {
    for (TSNode c : NamedChildren(body)) {
      if (Is(c, "field_declaration") || Is(c, "constant_declaration")) {
        type.members.push_back(FieldMember(c, type));
      } else if (Is(c, "method_declaration") ||
                 Is(c, "annotation_type_element_declaration")) {
        type.members.push_back(Method(c, type, MemberKind::kMethod));
      } else if (Is(c, "constructor_declaration")) {
        type.members.push_back(Method(c, type, MemberKind::kConstructor));
      } else if (Is(c, "compact_constructor_declaration")) {
        // The canonical constructor with the header's parameter list.
        MemberDecl ctor = Method(c, type, MemberKind::kConstructor);
        if (record_header_) {
          ctor.parameters = *record_header_;
          has_compact_ctor_ = true;
        }
        type.members.push_back(std::move(ctor));
      } else if (IsTypeDeclaration(c)) {
        const bool member_of_interface =
            type.kind == TypeKind::kInterface || type.kind == TypeKind::kAnnotation;
        type.nested_types.push_back(Type(c, type.qualified_name,
                                         member_of_interface ? Visibility::kPublic
                                                             : Visibility::kPackagePrivate));
      } else if (Is(c, "static_initializer")) {
        TSNode block = ts::FirstChildOfType(c, "block");
        static_init.Add("<clinit>", true, c, Statements(block));
      } else if (Is(c, "block")) {
        instance_init.Add("<init>", false, c, Statements(c));
      } else if (Is(c, "enum_constant")) {
        type.members.push_back(EnumConstant(c));
      } else if (Is(c, "enum_body_declarations") || Is(c, "ERROR")) {
        Body(c, type, instance_init, static_init);
      }
    }
  }

  Visibility DefaultVisibility(const TypeDecl& owner, MemberKind kind) const {
    if (owner.kind == TypeKind::kInterface || owner.kind == TypeKind::kAnnotation) {
      return Visibility::kPublic;
    }
    if (owner.kind == TypeKind::kEnum && kind == MemberKind::kConstructor) {
      return Visibility::kPrivate;
    }
    return Visibility::kPackagePrivate;
  }

  std::vector<Parameter> Parameters(TSNode formal) const {
    std::vector<Parameter> out;
    if (ts_node_is_null(formal)) return out;
    for (TSNode p : NamedChildren(formal)) {
      const int index = static_cast<int>(out.size());
      Parameter param;
      TSNode modifiers = ts::FirstChildOfType(p, "modifiers");
      if (Is(p, "formal_parameter")) {
        param.name = Text(Field(p, "name"));
        param.type_text = Norm(Field(p, "type"));
        TSNode dims = Field(p, "dimensions");
        if (!ts_node_is_null(dims)) param.type_text += Norm(dims);
      } else if (Is(p, "spread_parameter")) {
        for (TSNode c : NamedChildren(p)) {
          if (Is(c, "variable_declarator")) {
            param.name = Text(Field(c, "name"));
          } else if (!Is(c, "modifiers") && param.type_text.empty()) {
            param.type_text = Norm(c);
          }
        }
        param.type_text += "...";
      } else {
        continue;  // receiver_parameter and recovered fragments
      }
      std::erase(param.type_text, ' ');
      param.annotations = Annotations(modifiers, AnnotationSiteKind::kParameter, index);
      out.push_back(std::move(param));
    }
    return out;
  }

  MemberDecl Method(TSNode n, const TypeDecl& owner, MemberKind kind) {
    MemberDecl m;
    m.kind = kind;
    m.name = Text(Field(n, "name"));
    m.line = ts::Line(n);
    m.end_line = ts::EndLine(n);
    TSNode modifiers = ts::FirstChildOfType(n, "modifiers");
    m.visibility = VisibilityOf(modifiers, DefaultVisibility(owner, kind));
    m.is_static = !ts_node_is_null(modifiers) && ts::HasAnonymousChild(modifiers, "static");
    m.annotations = Annotations(modifiers, AnnotationSiteKind::kMethodOrReturn);
    for (const AnnotationUse& a : m.annotations) {
      if (a.name_text == "Override" || a.name_text == "java.lang.Override") {
        m.is_override = true;
      }
    }
    m.parameters = Parameters(Field(n, "parameters"));
    TSNode type = Field(n, "type");
    if (!ts_node_is_null(type)) m.return_type_text = Norm(type);
    TSNode body = Field(n, "body");
    if (!ts_node_is_null(body)) m.body = Statements(body);
    return m;
  }

  MemberDecl FieldMember(TSNode n, const TypeDecl& owner) {
    MemberDecl m;
    m.kind = MemberKind::kFieldOrProperty;
    m.line = ts::Line(n);
    m.end_line = ts::EndLine(n);
    TSNode modifiers = ts::FirstChildOfType(n, "modifiers");
    m.visibility = VisibilityOf(modifiers, DefaultVisibility(owner, m.kind));
    m.is_static = owner.kind == TypeKind::kInterface ||
                  (!ts_node_is_null(modifiers) && ts::HasAnonymousChild(modifiers, "static"));
    m.annotations = Annotations(modifiers, AnnotationSiteKind::kFieldOrProperty);
    m.return_type_text = Norm(Field(n, "type"));
    StatementTree body;
    for (TSNode c : NamedChildren(n)) {
      if (!Is(c, "variable_declarator")) continue;
      if (m.name.empty()) m.name = Text(Field(c, "name"));
      CollectStatements(c, body);
    }
    m.body = std::move(body);
    return m;
  }

  MemberDecl EnumConstant(TSNode n) {
    MemberDecl m;
    m.kind = MemberKind::kFieldOrProperty;
    m.name = Text(Field(n, "name"));
    m.visibility = Visibility::kPublic;
    m.is_static = true;
    m.line = ts::Line(n);
    m.end_line = ts::EndLine(n);
    m.annotations = Annotations(ts::FirstChildOfType(n, "modifiers"),
                                AnnotationSiteKind::kFieldOrProperty);
    StatementTree body;
    TSNode args = Field(n, "arguments");
    if (!ts_node_is_null(args)) CollectStatements(args, body);
    TSNode cls = Field(n, "body");
    if (!ts_node_is_null(cls)) CollectStatements(cls, body);
    m.body = std::move(body);
    return m;
  }

  // The record header declares the canonical constructor unless the body
  // spells it out. The implicit constructor has the record's own access.
  void RecordHeader(TSNode n, TypeDecl& type, Visibility record_visibility) {
    TSNode header = Field(n, "parameters");
    if (ts_node_is_null(header) || !record_header_) return;
    if (has_compact_ctor_) return;
    std::vector<Parameter> params = *record_header_;
    std::vector<std::string> header_types;
    for (const Parameter& p : params) header_types.push_back(p.type_text);
    for (const MemberDecl& m : type.members) {
      if (m.kind != MemberKind::kConstructor) continue;
      std::vector<std::string> types;
      for (const Parameter& p : m.parameters) types.push_back(p.type_text);
      if (types == header_types) return;  // explicit canonical constructor
    }
    MemberDecl ctor;
    ctor.kind = MemberKind::kConstructor;
    ctor.name = type.name;
    ctor.visibility = record_visibility;
    ctor.parameters = std::move(params);
    ctor.line = ts::Line(header);
    ctor.end_line = ts::EndLine(header);
    type.members.insert(type.members.begin(), std::move(ctor));
  }

  std::string Condition(TSNode n) const {
    if (Is(n, "parenthesized_expression")) {
      std::vector<TSNode> inner = NamedChildren(n);
      if (inner.size() == 1) return Norm(inner.front());
    }
    return Norm(n);
  }

  std::vector<std::string> Arguments(TSNode list) const {
    std::vector<std::string> out;
    if (ts_node_is_null(list)) return out;
    for (TSNode a : NamedChildren(list)) out.push_back(Norm(a));
    return out;
  }

  ThrowStatement Throw(TSNode n) const {
    ThrowStatement t;
    t.line = ts::Line(n);
    std::vector<TSNode> children = NamedChildren(n);
    if (!children.empty() && Is(children.front(), "object_creation_expression")) {
      TSNode creation = children.front();
      t.exception_type = std::string(StripTypeArguments(Norm(Field(creation, "type"))));
      std::erase(t.exception_type, ' ');
      t.arguments = Arguments(Field(creation, "arguments"));
    }
    return t;
  }

  Branch BranchOf(TSNode stmt) const {
    Branch b;
    if (Is(stmt, "block")) {
      std::vector<TSNode> stmts = NamedChildren(stmt);
      b.statement_count = static_cast<int>(stmts.size());
      if (stmts.size() == 1 && Is(stmts.front(), "throw_statement")) {
        b.sole_throw = Throw(stmts.front());
      }
    } else {
      b.statement_count = 1;
      if (Is(stmt, "throw_statement")) b.sole_throw = Throw(stmt);
    }
    return b;
  }

  void CollectStatements(TSNode root, StatementTree& out) const {
    ts::Walk(root, [&](TSNode n) {
      const std::string_view type = ts::Type(n);
      if (type == "if_statement") {
        IfStatement s;
        s.line = ts::Line(n);
        s.condition = Condition(Field(n, "condition"));
        TSNode then_node = Field(n, "consequence");
        if (!ts_node_is_null(then_node)) s.then_branch = BranchOf(then_node);
        TSNode else_node = Field(n, "alternative");
        if (!ts_node_is_null(else_node)) s.else_branch = BranchOf(else_node);
        out.ifs.push_back(std::move(s));
      } else if (type == "throw_statement") {
        out.throws.push_back(Throw(n));
      } else if (type == "method_invocation") {
        CallExpression call;
        call.line = ts::Line(n);
        call.callee = Text(Field(n, "name"));
        TSNode object = Field(n, "object");
        if (!ts_node_is_null(object)) {
          call.receiver = Norm(object);
          std::erase(call.receiver, ' ');
        }
        call.arguments = Arguments(Field(n, "arguments"));
        out.calls.push_back(std::move(call));
      } else if (type == "assert_statement") {
        std::vector<TSNode> children = NamedChildren(n);
        if (!children.empty()) {
          out.asserts.push_back({Norm(children.front()), ts::Line(n)});
        }
      }
      return true;
    });
  }

  StatementTree Statements(TSNode body) const {
    StatementTree tree;
    if (!ts_node_is_null(body)) CollectStatements(body, tree);
    return tree;
  }

  std::string_view src_;
  SourceUnit& unit_;
  std::optional<std::vector<Parameter>> record_header_;
  bool has_compact_ctor_ = false;
};

}  // namespace

void ExtractJava(TSNode root, std::string_view src, SourceUnit& unit) {
  JavaExtractor(src, unit).Run(root);
}

}  // namespace contractscan::internal
