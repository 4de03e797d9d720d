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

#include "contractscan/detectors.h"

#include <algorithm>
#include <tuple>

#include "contractscan/classification.h"
#include "contractscan/text.h"
#include "fmt/format.h"

namespace contractscan {
namespace {

constexpr std::string_view kContractPatternTag = "contract-returns-implies";

ArtifactKind ArtifactKindOf(MemberKind kind) {
  switch (kind) {
    case MemberKind::kMethod: return ArtifactKind::kMethod;
    case MemberKind::kConstructor: return ArtifactKind::kConstructor;
    case MemberKind::kFieldOrProperty: return ArtifactKind::kFieldOrProperty;
  }
  return ArtifactKind::kMethod;
}

ContractRecord MakeRecord(const SourceUnit& unit, const MemberContext& ctx,
                          const ConstructSpec& spec, OccurrenceSite site,
                          std::string condition, int line) {
  ContractRecord r;
  r.file_path = unit.path;
  r.construct_id = spec.id;
  r.category = spec.category;
  r.kind = Classify(spec, site);
  r.condition_text = std::move(condition);
  r.artifact_name = ctx.member.name;
  r.artifact_kind = ArtifactKindOf(ctx.member.kind);
  r.owner_class = std::string(ctx.owner_class);
  r.line = line;
  return r;
}

bool Touches(std::string_view qualified, std::string_view package_name) {
  return qualified == package_name ||
         (qualified.size() > package_name.size() && qualified.starts_with(package_name) &&
          qualified[package_name.size()] == '.');
}

std::string AnnotationCondition(const AnnotationUse& use) {
  // A bare marker carries no condition; arguments make it a constraint.
  if (use.arguments_text.empty()) return {};
  return fmt::format("{}{}", LastSegment(use.name_text), use.arguments_text);
}

// Class an API call's receiver denotes, or empty.
std::string ResolveApiReceiver(const SourceUnit& unit, const Catalog& catalog,
                               std::string_view receiver) {
  if (receiver.find('.') != std::string_view::npos) {
    return catalog.IsApiClass(receiver) ? std::string(receiver) : std::string();
  }
  for (const ImportDecl& imp : unit.imports) {
    if (!imp.is_wildcard && !imp.is_static && imp.BoundName() == receiver) {
      return catalog.IsApiClass(imp.qualified_name) ? imp.qualified_name : std::string();
    }
  }
  for (const ImportDecl& imp : unit.imports) {
    if (!imp.is_wildcard || imp.is_static) continue;
    std::string candidate = fmt::format("{}.{}", imp.qualified_name, receiver);
    if (catalog.IsApiClass(candidate)) return candidate;
  }
  return {};
}

// (class, method) a receiver-less call denotes through a member import.
std::optional<std::pair<std::string, std::string>> ResolveApiBareCall(
    const SourceUnit& unit, const Catalog& catalog, std::string_view callee) {
  const bool kotlin = unit.language == Language::kKotlin;
  for (const ImportDecl& imp : unit.imports) {
    if (imp.is_wildcard || (!kotlin && !imp.is_static)) continue;
    if (imp.BoundName() != callee) continue;
    const std::string owner(DropLastSegment(imp.qualified_name));
    if (catalog.IsApiClass(owner)) {
      return std::make_pair(owner, std::string(LastSegment(imp.qualified_name)));
    }
  }
  for (const ImportDecl& imp : unit.imports) {
    if (!imp.is_wildcard || (!kotlin && !imp.is_static)) continue;
    if (catalog.IsApiClass(imp.qualified_name) &&
        catalog.FindApi(imp.qualified_name, callee) != nullptr) {
      return std::make_pair(imp.qualified_name, std::string(callee));
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<ContractRecord> DetectCre(const SourceUnit& unit, const Catalog& catalog) {
  std::vector<ContractRecord> out;
  ForEachMember(unit, [&](const MemberContext& ctx) {
    if (!ctx.member.body) return;
    for (const IfStatement& s : ctx.member.body->ifs) {
      const ThrowStatement* throws[] = {
          s.then_branch.sole_throw ? &*s.then_branch.sole_throw : nullptr,
          s.else_branch && s.else_branch->sole_throw ? &*s.else_branch->sole_throw : nullptr};
      for (const ThrowStatement* t : throws) {
        if (t == nullptr || t->exception_type.empty()) continue;
        const ConstructSpec* spec = catalog.FindCre(LastSegment(t->exception_type));
        if (spec == nullptr || !spec->AppliesTo(unit.language)) continue;
        out.push_back(
            MakeRecord(unit, ctx, *spec, OccurrenceSite::kStatement, s.condition, t->line));
      }
    }
  });
  return out;
}

std::vector<ContractRecord> DetectApi(const SourceUnit& unit, const Catalog& catalog) {
  std::vector<ContractRecord> out;
  const bool gated = std::any_of(unit.imports.begin(), unit.imports.end(), [&](const ImportDecl& imp) {
    return std::any_of(catalog.api_packages().begin(), catalog.api_packages().end(),
                       [&](const std::string& p) { return Touches(imp.qualified_name, p); });
  });
  if (!gated) return out;
  ForEachMember(unit, [&](const MemberContext& ctx) {
    if (!ctx.member.body) return;
    for (const CallExpression& call : ctx.member.body->calls) {
      const ConstructSpec* spec = nullptr;
      if (!call.receiver.empty()) {
        const std::string cls = ResolveApiReceiver(unit, catalog, call.receiver);
        if (!cls.empty()) spec = catalog.FindApi(cls, call.callee);
      } else if (auto target = ResolveApiBareCall(unit, catalog, call.callee)) {
        spec = catalog.FindApi(target->first, target->second);
      }
      if (spec == nullptr || !spec->AppliesTo(unit.language)) continue;
      std::string condition = call.arguments.empty() ? std::string() : call.arguments.front();
      out.push_back(MakeRecord(unit, ctx, *spec, OccurrenceSite::kStatement,
                               std::move(condition), call.line));
    }
  });
  return out;
}

bool IsAmbiguousAssertionName(const SourceUnit& unit, std::string_view name) {
  if (std::binary_search(unit.declared_function_names.begin(),
                         unit.declared_function_names.end(), name)) {
    return true;
  }
  for (const ImportDecl& imp : unit.imports) {
    if (imp.BoundName() == name && !Touches(imp.qualified_name, "kotlin")) return true;
  }
  return false;
}

std::vector<ContractRecord> DetectAssertions(const SourceUnit& unit, const Catalog& catalog) {
  std::vector<ContractRecord> out;
  if (unit.language == Language::kJava) {
    const ConstructSpec* spec =
        catalog.FindAssertion(AssertionForm::kStatement, "assert", Language::kJava);
    if (spec == nullptr) return out;
    ForEachMember(unit, [&](const MemberContext& ctx) {
      if (!ctx.member.body) return;
      for (const AssertStatement& a : ctx.member.body->asserts) {
        out.push_back(
            MakeRecord(unit, ctx, *spec, OccurrenceSite::kStatement, a.condition, a.line));
      }
    });
    return out;
  }
  std::vector<std::string> usable;
  for (const std::string& name : catalog.KotlinAssertionNames()) {
    if (!IsAmbiguousAssertionName(unit, name)) usable.push_back(name);
  }
  ForEachMember(unit, [&](const MemberContext& ctx) {
    if (!ctx.member.body) return;
    for (const CallExpression& call : ctx.member.body->calls) {
      if (!call.receiver.empty()) continue;
      if (std::find(usable.begin(), usable.end(), call.callee) == usable.end()) continue;
      const ConstructSpec* spec =
          catalog.FindAssertion(AssertionForm::kCall, call.callee, Language::kKotlin);
      if (spec == nullptr) continue;
      std::string condition = call.arguments.empty() ? std::string() : call.arguments.front();
      out.push_back(MakeRecord(unit, ctx, *spec, OccurrenceSite::kStatement,
                               std::move(condition), call.line));
    }
  });
  return out;
}

std::optional<std::string> ResolveAnnotation(const SourceUnit& unit, const Catalog& catalog,
                                             std::string_view name_text) {
  auto found = [&](std::string qualified) -> std::optional<std::string> {
    if (catalog.FindAnnotation(qualified) != nullptr) return qualified;
    return std::nullopt;
  };
  const size_t dot = name_text.find('.');
  if (dot == std::string_view::npos) {
    for (const ImportDecl& imp : unit.imports) {
      if (!imp.is_wildcard && imp.BoundName() == name_text) return found(imp.qualified_name);
    }
    for (const ImportDecl& imp : unit.imports) {
      if (!imp.is_wildcard || imp.is_static) continue;
      if (auto q = found(fmt::format("{}.{}", imp.qualified_name, name_text))) return q;
    }
    return std::nullopt;
  }
  if (auto q = found(std::string(name_text))) return q;
  // Partially qualified through an imported outer name, e.g. `@Outer.Inner`.
  const std::string_view head = name_text.substr(0, dot);
  for (const ImportDecl& imp : unit.imports) {
    if (!imp.is_wildcard && imp.BoundName() == head) {
      return found(fmt::format("{}{}", imp.qualified_name, name_text.substr(dot)));
    }
  }
  return std::nullopt;
}

std::vector<ContractRecord> DetectAnnotations(const SourceUnit& unit, const Catalog& catalog) {
  std::vector<ContractRecord> out;
  auto emit = [&](const AnnotationUse& use, auto&& make) {
    std::optional<std::string> qualified = ResolveAnnotation(unit, catalog, use.name_text);
    if (!qualified) return;
    const ConstructSpec* spec = catalog.FindAnnotation(*qualified);
    if (spec == nullptr || !spec->AppliesTo(unit.language)) return;
    ContractRecord r = make(*spec);
    if (use.site == AnnotationSiteKind::kParameter) r.parameter_index = use.parameter_index;
    out.push_back(std::move(r));
  };
  ForEachType(unit, [&](const TypeDecl& type) {
    for (const AnnotationUse& use : type.annotations) {
      emit(use, [&](const ConstructSpec& spec) {
        ContractRecord r;
        r.file_path = unit.path;
        r.construct_id = spec.id;
        r.category = spec.category;
        r.kind = Classify(spec, SiteOf(use.site));
        r.condition_text = AnnotationCondition(use);
        r.artifact_name = type.name;
        r.artifact_kind = ArtifactKind::kType;
        r.owner_class = type.qualified_name;
        r.line = use.line;
        return r;
      });
    }
  });
  ForEachMember(unit, [&](const MemberContext& ctx) {
    auto visit = [&](const AnnotationUse& use) {
      emit(use, [&](const ConstructSpec& spec) {
        return MakeRecord(unit, ctx, spec, SiteOf(use.site), AnnotationCondition(use), use.line);
      });
    };
    for (const AnnotationUse& use : ctx.member.annotations) visit(use);
    for (const Parameter& p : ctx.member.parameters) {
      for (const AnnotationUse& use : p.annotations) visit(use);
    }
  });
  return out;
}

std::vector<ContractRecord> DetectKotlinContracts(const SourceUnit& unit,
                                                  const Catalog& catalog) {
  std::vector<ContractRecord> out;
  if (unit.language != Language::kKotlin) return out;
  const ConstructSpec* spec = catalog.FindOther(kContractPatternTag);
  if (spec == nullptr) return out;
  ForEachMember(unit, [&](const MemberContext& ctx) {
    if (!ctx.member.body) return;
    for (const ContractBlock& block : ctx.member.body->contract_blocks) {
      out.push_back(MakeRecord(unit, ctx, *spec, OccurrenceSite::kStatement,
                               block.effects.front().implies_text, block.line));
    }
  });
  return out;
}

std::vector<ContractRecord> DetectAll(const SourceUnit& unit, const Catalog& catalog) {
  std::vector<ContractRecord> all;
  for (auto* detect : {&DetectCre, &DetectApi, &DetectAssertions, &DetectAnnotations,
                       &DetectKotlinContracts}) {
    std::vector<ContractRecord> part = detect(unit, catalog);
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::stable_sort(all.begin(), all.end(), [](const ContractRecord& a, const ContractRecord& b) {
    return std::make_tuple(a.line, std::cref(a.construct_id), a.parameter_index.value_or(-1)) <
           std::make_tuple(b.line, std::cref(b.construct_id), b.parameter_index.value_or(-1));
  });
  return all;
}

}  // namespace contractscan
