// Copyright 2026 The mathtext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mathtext/lexlayer.h"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_set>
#include <utility>

#include "mathtext/error.h"
#include "mathtext/text_util.h"

namespace mathtext {

namespace {

bool IsAcronymShape(std::string_view s) {
  if (s.size() < 2 || !IsAsciiUpper(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return IsAsciiUpper(c) || IsAsciiDigit(c); });
}

// Case-folded key of tokens [begin, end), or nullopt if the range runs past
// the sentence.
std::optional<std::string> FoldedKey(std::span<const TaggedToken> tokens,
                                     std::size_t begin, std::size_t end) {
  if (end > tokens.size()) return std::nullopt;
  std::string key;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) key += ' ';
    key += CaseFold(tokens[i].token.surface);
  }
  return key;
}

bool Contains(const std::vector<std::string>& values, const std::string& v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

struct Candidate {
  std::size_t length = 0;
  const LexiconEntry* entry = nullptr;
};

Candidate LongestAt(std::span<const TaggedToken> tokens, std::size_t i,
                    const Lexicon& lexicon) {
  Candidate best;
  const std::size_t max_len =
      std::min(lexicon.max_key_tokens(), tokens.size() - i);
  for (std::size_t len = max_len; len >= 1; --len) {
    auto key = FoldedKey(tokens, i, i + len);
    if (const LexiconEntry* e = lexicon.find(*key)) {
      best = {len, e};
      break;
    }
  }
  if (lexicon.kind() != LexiconKind::kPersonName) return best;

  for (std::size_t len = max_len; len >= 1; --len) {
    // "family , given"
    if (auto key = FoldedKey(tokens, i, i + len)) {
      const LexiconEntry* e = lexicon.find(*key);
      std::size_t comma = i + len;
      if (e && comma + 1 < tokens.size() &&
          tokens[comma].token.surface == "," &&
          Contains(e->payload, CaseFold(tokens[comma + 1].token.surface)) &&
          len + 2 > best.length) {
        best = {len + 2, e};
      }
    }
    // "given family"
    if (auto key = FoldedKey(tokens, i + 1, i + 1 + len)) {
      const LexiconEntry* e = lexicon.find(*key);
      if (e && Contains(e->payload, CaseFold(tokens[i].token.surface)) &&
          len + 1 > best.length) {
        best = {len + 1, e};
      }
    }
  }
  return best;
}

}  // namespace

std::string_view EntityKindName(EntityKind kind) {
  switch (kind) {
    case EntityKind::kAcronym: return "acronym";
    case EntityKind::kPersonName: return "person_name";
    case EntityKind::kNamedEntity: return "named_entity";
  }
  return "unknown";
}

std::vector<EntityMatch> DetectAcronyms(std::span<const TaggedToken> tokens,
                                        const Lexicon& lexicon) {
  if (lexicon.kind() != LexiconKind::kAcronym) {
    throw Error(ErrorCode::kWrongLexiconKind,
                "acronym detection needs an acronym lexicon");
  }
  std::vector<EntityMatch> matches;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i].token;
    if (tok.kind != TokenKind::kWord || !IsAcronymShape(tok.surface)) continue;
    EntityMatch m;
    m.kind = EntityKind::kAcronym;
    m.tokens = {i, i + 1};
    m.span = tok.span;
    m.matched_key = tok.surface;
    if (const LexiconEntry* e = lexicon.find(tok.surface)) m.payload = e->payload;
    matches.push_back(std::move(m));
  }
  return matches;
}

std::vector<EntityMatch> MatchGazetteer(std::span<const TaggedToken> tokens,
                                        const Lexicon& lexicon) {
  EntityKind kind;
  switch (lexicon.kind()) {
    case LexiconKind::kPersonName: kind = EntityKind::kPersonName; break;
    case LexiconKind::kNamedEntity: kind = EntityKind::kNamedEntity; break;
    default:
      throw Error(ErrorCode::kWrongLexiconKind,
                  "gazetteer matching needs a person_name or named_entity "
                  "lexicon");
  }
  std::vector<EntityMatch> matches;
  if (lexicon.empty()) return matches;
  std::size_t i = 0;
  while (i < tokens.size()) {
    Candidate c = LongestAt(tokens, i, lexicon);
    if (c.length == 0) {
      ++i;
      continue;
    }
    EntityMatch m;
    m.kind = kind;
    m.tokens = {i, i + c.length};
    m.span = {tokens[i].token.span.begin,
              tokens[i + c.length - 1].token.span.end};
    m.matched_key = c.entry->key;
    m.payload = c.entry->payload;
    matches.push_back(std::move(m));
    i += c.length;
  }
  return matches;
}

std::vector<EntityMatch> ResolveEntityOverlaps(
    std::vector<EntityMatch> named_entities,
    std::vector<EntityMatch> person_names, std::vector<EntityMatch> acronyms) {
  std::vector<EntityMatch> kept = std::move(named_entities);
  auto add_if_free = [&kept](std::vector<EntityMatch>& candidates) {
    const std::size_t fixed = kept.size();
    for (auto& c : candidates) {
      bool clash = false;
      for (std::size_t k = 0; k < fixed && !clash; ++k) {
        clash = kept[k].sentence == c.sentence &&
                kept[k].tokens.Overlaps(c.tokens);
      }
      if (!clash) kept.push_back(std::move(c));
    }
  };
  add_if_free(person_names);
  add_if_free(acronyms);
  std::stable_sort(kept.begin(), kept.end(),
                   [](const EntityMatch& a, const EntityMatch& b) {
                     if (a.sentence != b.sentence) return a.sentence < b.sentence;
                     return a.tokens.begin < b.tokens.begin;
                   });
  return kept;
}

UnknownTokenReport ReportUnknownTokens(
    const std::vector<TaggedSentence>& document, const HmmModel& model,
    std::span<const Lexicon* const> lexicons) {
  std::unordered_set<std::string> exact;
  std::unordered_set<std::string> folded;
  for (const Lexicon* lex : lexicons) {
    auto& target = lex->kind() == LexiconKind::kAcronym ? exact : folded;
    for (const auto& e : lex->entries()) {
      target.insert(e.key);
      for (const auto& t : e.key_tokens) target.insert(t);
    }
  }

  std::map<std::string, std::size_t> counts;
  for (const auto& sentence : document) {
    for (const auto& tt : sentence) {
      const Token& tok = tt.token;
      if (tok.kind != TokenKind::kWord) continue;
      if (model.InVocabulary(tok.surface)) continue;
      if (exact.count(tok.surface) || folded.count(CaseFold(tok.surface))) {
        continue;
      }
      ++counts[tok.surface];
    }
  }

  UnknownTokenReport report;
  for (const auto& [surface, count] : counts) {
    UnknownTagProposal p = ProposeUnknownTag(model, surface);
    report.entries.push_back({surface, p.tag, p.confidence, count});
  }
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const UnknownTokenEntry& a, const UnknownTokenEntry& b) {
                     return a.occurrence_count > b.occurrence_count;
                   });
  return report;
}

}  // namespace mathtext
