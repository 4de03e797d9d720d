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

#include "contractscan/evolution.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "contractscan/text.h"

namespace contractscan {

std::string_view PatternName(EvolutionPattern pattern) {
  switch (pattern) {
    case EvolutionPattern::kUnchanged: return "Unchanged";
    case EvolutionPattern::kMinorChange: return "MinorChange";
    case EvolutionPattern::kPreStrengthened: return "PreStrengthened";
    case EvolutionPattern::kPreWeakened: return "PreWeakened";
    case EvolutionPattern::kPostStrengthened: return "PostStrengthened";
    case EvolutionPattern::kPostWeakened: return "PostWeakened";
    case EvolutionPattern::kUnclassified: return "Unclassified";
  }
  return "Unclassified";
}

bool IsCritical(EvolutionPattern pattern) {
  return pattern == EvolutionPattern::kPreStrengthened ||
         pattern == EvolutionPattern::kPostWeakened;
}

EvolutionPattern Mirror(EvolutionPattern pattern) {
  switch (pattern) {
    case EvolutionPattern::kPreStrengthened: return EvolutionPattern::kPreWeakened;
    case EvolutionPattern::kPreWeakened: return EvolutionPattern::kPreStrengthened;
    case EvolutionPattern::kPostStrengthened: return EvolutionPattern::kPostWeakened;
    case EvolutionPattern::kPostWeakened: return EvolutionPattern::kPostStrengthened;
    default: return pattern;
  }
}

namespace {

enum class Op { kNone, kAnd, kOr };

// Operator at `s[i]` when it sits at depth 0, with its length.
std::pair<Op, size_t> OperatorAt(std::string_view s, size_t i) {
  const char c = s[i];
  if (c != '&' && c != '|') return {Op::kNone, 0};
  const Op op = c == '&' ? Op::kAnd : Op::kOr;
  if (i + 1 < s.size() && s[i + 1] == c) return {op, 2};
  // `&=`, `|=` are assignments, not clause separators.
  if (i + 1 < s.size() && s[i + 1] == '=') return {Op::kNone, 0};
  return {op, 1};
}

// Index past the literal starting at `i`.
size_t SkipLiteral(std::string_view s, size_t i) {
  const char quote = s[i];
  if (quote == '"' && s.substr(i, 3) == "\"\"\"") {
    size_t end = s.find("\"\"\"", i + 3);
    return end == std::string_view::npos ? s.size() : end + 3;
  }
  for (size_t j = i + 1; j < s.size(); ++j) {
    if (s[j] == '\\') {
      ++j;
    } else if (s[j] == quote) {
      return j + 1;
    }
  }
  return s.size();
}

// Position of the parenthesis closing the one at `open`, or npos.
size_t MatchingParen(std::string_view s, size_t open) {
  int depth = 0;
  for (size_t i = open; i < s.size();) {
    const char c = s[i];
    if (c == '"' || c == '\'') {
      i = SkipLiteral(s, i);
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')' && --depth == 0) return i;
    ++i;
  }
  return std::string_view::npos;
}

std::string Clean(std::string_view text) {
  std::string s = NormalizeWhitespace(text);
  while (s.size() >= 2 && s.front() == '(' && MatchingParen(s, 0) == s.size() - 1) {
    s = NormalizeWhitespace(std::string_view(s).substr(1, s.size() - 2));
  }
  return s;
}

std::vector<std::string> SplitTopLevel(std::string_view text, Op which) {
  const std::string s = Clean(text);
  std::vector<std::string> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size();) {
    const char c = s[i];
    if (c == '"' || c == '\'') {
      i = SkipLiteral(s, i);
      continue;
    }
    if (c == '(' || c == '[' || c == '{') ++depth;
    if ((c == ')' || c == ']' || c == '}') && depth > 0) --depth;
    if (depth == 0) {
      auto [op, len] = OperatorAt(s, i);
      if (op == which) {
        out.push_back(Clean(std::string_view(s).substr(start, i - start)));
        i += len;
        start = i;
        continue;
      }
      if (len > 0) {
        i += len;
        continue;
      }
    }
    ++i;
  }
  out.push_back(Clean(std::string_view(s).substr(start)));
  return out;
}

// `small` is a proper sub-multiset of `large`.
bool ProperSubset(std::vector<std::string> small, std::vector<std::string> large) {
  if (small.size() >= large.size()) return false;
  std::sort(small.begin(), small.end());
  std::sort(large.begin(), large.end());
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

struct Entry {
  std::string construct_id;
  int parameter_index = -1;
  std::string condition;

  friend auto operator<=>(const Entry&, const Entry&) = default;
};

std::map<ContractKind, std::vector<Entry>> Partition(std::span<const ContractRecord> records) {
  std::map<ContractKind, std::vector<Entry>> out;
  for (ContractKind k : kAllKinds) out[k];
  for (const ContractRecord& r : records) {
    out[r.kind].push_back(
        {r.construct_id, r.parameter_index.value_or(-1), NormalizeWhitespace(r.condition_text)});
  }
  for (auto& [kind, entries] : out) std::sort(entries.begin(), entries.end());
  return out;
}

// Patterns for one polarity-carrying kind whose multisets differ.
void ClassifyPolarized(ContractKind kind, const std::vector<Entry>& before,
                       const std::vector<Entry>& after, std::set<Classification>& out) {
  const EvolutionPattern stronger = kind == ContractKind::kPre
                                        ? EvolutionPattern::kPreStrengthened
                                        : EvolutionPattern::kPostStrengthened;
  const EvolutionPattern weaker = Mirror(stronger);

  std::vector<Entry> removed, added;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::back_inserter(removed));
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(added));

  using Slot = std::pair<std::string, int>;
  std::map<Slot, std::pair<std::vector<std::string>, std::vector<std::string>>> slots;
  for (const Entry& e : removed) {
    slots[{e.construct_id, e.parameter_index}].first.push_back(e.condition);
  }
  for (const Entry& e : added) {
    slots[{e.construct_id, e.parameter_index}].second.push_back(e.condition);
  }

  for (auto& [slot, texts] : slots) {
    const std::vector<std::string>& gone = texts.first;
    const std::vector<std::string>& came = texts.second;
    // Related pairs first, visited in an order that does not depend on which
    // side is "before", so swapping versions mirrors the outcome.
    struct Candidate {
      std::string lo, hi;
      size_t i, j;
      int relation;
    };
    std::vector<Candidate> candidates;
    for (size_t i = 0; i < gone.size(); ++i) {
      for (size_t j = 0; j < came.size(); ++j) {
        const int rel = CompareConditions(gone[i], came[j]);
        if (rel == 0) continue;
        candidates.push_back({std::min(gone[i], came[j]), std::max(gone[i], came[j]), i, j, rel});
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return std::tie(a.lo, a.hi, a.i, a.j) < std::tie(b.lo, b.hi, b.i, b.j);
    });
    std::vector<bool> gone_used(gone.size()), came_used(came.size());
    for (const Candidate& c : candidates) {
      if (gone_used[c.i] || came_used[c.j]) continue;
      gone_used[c.i] = came_used[c.j] = true;
      out.insert({kind, c.relation > 0 ? stronger : weaker});
    }
    std::vector<size_t> gone_left, came_left;
    for (size_t i = 0; i < gone.size(); ++i) {
      if (!gone_used[i]) gone_left.push_back(i);
    }
    for (size_t j = 0; j < came.size(); ++j) {
      if (!came_used[j]) came_left.push_back(j);
    }
    const size_t paired = std::min(gone_left.size(), came_left.size());
    if (paired > 0) out.insert({kind, EvolutionPattern::kMinorChange});
    if (came_left.size() > paired) out.insert({kind, stronger});
    if (gone_left.size() > paired) out.insert({kind, weaker});
  }
}

}  // namespace

std::vector<std::string> SplitDisjuncts(std::string_view condition) {
  return SplitTopLevel(condition, Op::kOr);
}

std::vector<std::string> SplitConjuncts(std::string_view condition) {
  if (SplitDisjuncts(condition).size() > 1) return {Clean(condition)};
  return SplitTopLevel(condition, Op::kAnd);
}

int CompareConditions(std::string_view before, std::string_view after) {
  const auto conj_before = SplitConjuncts(before);
  const auto conj_after = SplitConjuncts(after);
  if (ProperSubset(conj_before, conj_after)) return 1;
  if (ProperSubset(conj_after, conj_before)) return -1;
  const auto disj_before = SplitDisjuncts(before);
  const auto disj_after = SplitDisjuncts(after);
  if (ProperSubset(disj_before, disj_after)) return -1;
  if (ProperSubset(disj_after, disj_before)) return 1;
  return 0;
}

std::vector<Classification> ClassifyDiff(std::span<const ContractRecord> before,
                                         std::span<const ContractRecord> after) {
  const auto b = Partition(before);
  const auto a = Partition(after);
  if (b == a) return {{std::nullopt, EvolutionPattern::kUnchanged}};

  std::set<Classification> out;
  for (ContractKind kind : kAllKinds) {
    const std::vector<Entry>& kb = b.at(kind);
    const std::vector<Entry>& ka = a.at(kind);
    if (kb == ka) continue;
    if (kind == ContractKind::kPre || kind == ContractKind::kPost) {
      ClassifyPolarized(kind, kb, ka, out);
    } else {
      out.insert({kind, EvolutionPattern::kUnclassified});
    }
  }
  return {out.begin(), out.end()};
}

namespace {

// Member key of each record, or nullopt when it cannot be determined.
std::vector<std::optional<MemberKey>> RecordKeys(const SnapshotReport& report) {
  std::vector<std::optional<MemberKey>> out;
  out.reserve(report.records.size());
  if (report.members.empty()) {
    for (const ContractRecord& r : report.records) {
      out.push_back(MemberKey{r.owner_class, r.artifact_name, {}, r.artifact_kind});
    }
    return out;
  }
  for (const std::optional<size_t>& idx : LinkRecords(report)) {
    out.push_back(idx ? std::optional<MemberKey>(report.members[*idx].key) : std::nullopt);
  }
  return out;
}

std::map<MemberKey, int> KeyCounts(const SnapshotReport& report) {
  std::map<MemberKey, int> counts;
  if (report.members.empty()) {
    for (const std::optional<MemberKey>& k : RecordKeys(report)) counts[*k] = 1;
    return counts;
  }
  for (const MemberInfo& m : report.members) ++counts[m.key];
  return counts;
}

}  // namespace

MatchResult MatchMethods(const SnapshotReport& v1, const SnapshotReport& v2) {
  const auto c1 = KeyCounts(v1);
  const auto c2 = KeyCounts(v2);
  std::set<MemberKey> collided;
  for (const auto* counts : {&c1, &c2}) {
    for (const auto& [key, n] : *counts) {
      if (n > 1) collided.insert(key);
    }
  }
  MatchResult result;
  result.collisions.assign(collided.begin(), collided.end());
  std::set<MemberKey> all;
  for (const auto& [key, n] : c1) all.insert(key);
  for (const auto& [key, n] : c2) all.insert(key);
  for (const MemberKey& key : all) {
    if (collided.contains(key)) continue;
    const bool in1 = c1.contains(key), in2 = c2.contains(key);
    result.matches.push_back(
        {key, in1 && in2 ? Presence::kBoth : (in1 ? Presence::kOnlyV1 : Presence::kOnlyV2)});
  }
  return result;
}

DiffBuild BuildDiffRecords(const SnapshotReport& v1, const SnapshotReport& v2) {
  DiffBuild build;
  const MatchResult match = MatchMethods(v1, v2);
  build.collisions = match.collisions;
  const std::set<MemberKey> collided(match.collisions.begin(), match.collisions.end());

  const auto keys1 = RecordKeys(v1);
  const auto keys2 = RecordKeys(v2);
  std::map<MemberKey, std::vector<size_t>> by_key1, by_key2;
  for (size_t i = 0; i < keys1.size(); ++i) {
    if (keys1[i] && !collided.contains(*keys1[i])) by_key1[*keys1[i]].push_back(i);
  }
  for (size_t i = 0; i < keys2.size(); ++i) {
    if (keys2[i] && !collided.contains(*keys2[i])) by_key2[*keys2[i]].push_back(i);
  }

  // One flag per contract occurrence: v1 contracts then v2 contracts.
  const size_t n1 = v1.records.size();
  std::vector<bool> visited(n1 + v2.records.size(), false);
  auto emit = [&](const MemberKey& key) {
    DiffRecord d;
    d.key = key;
    if (auto it = by_key1.find(key); it != by_key1.end()) {
      for (size_t i : it->second) {
        visited[i] = true;
        d.before.push_back(v1.records[i]);
      }
    }
    if (auto it = by_key2.find(key); it != by_key2.end()) {
      for (size_t i : it->second) {
        visited[n1 + i] = true;
        d.after.push_back(v2.records[i]);
      }
    }
    d.classifications = ClassifyDiff(d.before, d.after);
    build.records.push_back(std::move(d));
  };

  for (size_t i = 0; i < n1; ++i) {
    if (visited[i]) continue;
    if (!keys1[i] || collided.contains(*keys1[i])) {
      visited[i] = true;
      ++build.skipped_records;
      continue;
    }
    emit(*keys1[i]);
  }
  for (size_t i = 0; i < v2.records.size(); ++i) {
    if (visited[n1 + i]) continue;
    if (!keys2[i] || collided.contains(*keys2[i])) {
      visited[n1 + i] = true;
      ++build.skipped_records;
      continue;
    }
    emit(*keys2[i]);
  }
  std::sort(build.records.begin(), build.records.end(),
            [](const DiffRecord& a, const DiffRecord& b) { return a.key < b.key; });
  return build;
}

PatternTally Tally(std::span<const DiffRecord> records) {
  PatternTally t;
  for (EvolutionPattern p : kAllPatterns) t.counts[p] = 0;
  t.diff_records = static_cast<int64_t>(records.size());
  for (const DiffRecord& d : records) {
    bool critical = false;
    for (const Classification& c : d.classifications) {
      ++t.counts[c.pattern];
      if (IsCritical(c.pattern)) {
        ++t.critical_classifications;
        critical = true;
      }
    }
    if (critical) ++t.records_with_critical;
  }
  return t;
}

}  // namespace contractscan
