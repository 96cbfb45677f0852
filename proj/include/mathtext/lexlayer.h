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

#ifndef MATHTEXT_LEXLAYER_H_
#define MATHTEXT_LEXLAYER_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mathtext/hmm_tagger.h"
#include "mathtext/ingest.h"

namespace mathtext {

enum class EntityKind { kAcronym, kPersonName, kNamedEntity };

std::string_view EntityKindName(EntityKind kind);

// Half-open token index range within one sentence.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool Overlaps(const TokenRange& o) const {
    return begin < o.end && o.begin < end;
  }
  bool operator==(const TokenRange&) const = default;
};

struct EntityMatch {
  EntityKind kind = EntityKind::kNamedEntity;
  // Sentence index within the document; 0 for single-sentence calls.
  std::size_t sentence = 0;
  TokenRange tokens;
  // Byte range covered by the tokens, in the coordinates of the token spans.
  ByteRange span;
  std::string matched_key;
  std::vector<std::string> payload;
};

// Word tokens of length >= 2 whose letters are all uppercase (digits allowed
// after the first character). Lexicon hits carry their resolutions; other
// candidates are reported with an empty payload.
std::vector<EntityMatch> DetectAcronyms(std::span<const TaggedToken> tokens,
                                        const Lexicon& lexicon);

// Greedy left-to-right longest match of case-folded token sequences against
// lexicon keys. Person-name lexicons (key = family name, payload = given
// names) also match "given family" and "family , given".
std::vector<EntityMatch> MatchGazetteer(std::span<const TaggedToken> tokens,
                                        const Lexicon& lexicon);

// Keeps named entities, then person names that do not overlap them, then
// acronyms that overlap neither. Output is ordered by token position.
std::vector<EntityMatch> ResolveEntityOverlaps(
    std::vector<EntityMatch> named_entities,
    std::vector<EntityMatch> person_names, std::vector<EntityMatch> acronyms);

struct UnknownTokenEntry {
  std::string surface;
  TagId proposed_tag = 0;
  double confidence = 0.0;
  std::size_t occurrence_count = 0;
};

struct UnknownTokenReport {
  // Sorted by descending count, then surface.
  std::vector<UnknownTokenEntry> entries;
};

// Distinct word tokens that are neither in the tagger vocabulary nor in any
// lexicon (as a key or as a word of a multi-word key), with a proposed tag.
UnknownTokenReport ReportUnknownTokens(
    const std::vector<TaggedSentence>& document, const HmmModel& model,
    std::span<const Lexicon* const> lexicons);

}  // namespace mathtext

#endif  // MATHTEXT_LEXLAYER_H_
