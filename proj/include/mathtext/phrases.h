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

#ifndef MATHTEXT_PHRASES_H_
#define MATHTEXT_PHRASES_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mathtext/hmm_tagger.h"
#include "mathtext/ingest.h"
#include "mathtext/lexlayer.h"
#include "mathtext/textprep.h"

namespace mathtext {

// Chunking runs over tag ids extended by one virtual symbol for the
// preposition "of" (written `IN=of` in pattern files), so patterns can link
// noun phrases with "of" while staying purely symbolic.
using ChunkSymbol = std::size_t;

inline ChunkSymbol OfSymbol(const TagSet& tagset) { return tagset.size(); }

std::vector<ChunkSymbol> ChunkSymbols(std::span<const TaggedToken> sentence,
                                      const TagSet& tagset);

enum class Repetition { kOne, kOptional, kOneOrMore, kZeroOrMore };

struct PatternElement {
  std::vector<ChunkSymbol> symbols;  // sorted
  Repetition repetition = Repetition::kOne;

  bool Accepts(ChunkSymbol s) const;
  bool Mandatory() const {
    return repetition == Repetition::kOne ||
           repetition == Repetition::kOneOrMore;
  }
};

struct TagPattern {
  std::string name;
  std::vector<PatternElement> elements;

  // Length of the longest match starting at `pos`, 0 if none.
  std::size_t LongestMatch(std::span<const ChunkSymbol> symbols,
                           std::size_t pos) const;
};

// Parses `name: CLASS{rep} CLASS{rep} ...` where CLASS is a `|`-joined list of
// tags (or `IN=of`) and rep is one of 1 ? + * (omitted means 1).
// Throws Error(kBadPattern).
TagPattern ParsePattern(std::string_view line, const TagSet& tagset);

// One pattern per non-blank line; lines starting with '#' are comments.
std::vector<TagPattern> ParsePatterns(std::string_view contents,
                                      const TagSet& tagset);

// NP1: (JJ|VBN|VBG)* (NN|NNS|NNP|NNPS|FORMULA)+  and  NP2: NP1 of NP1.
// Tags missing from `tagset` are dropped from the classes.
std::vector<TagPattern> DefaultPatterns(const TagSet& tagset);

// Greedy left-to-right scan: at each position the longest match over all
// patterns wins (earlier pattern on ties) and the scan resumes after it.
std::vector<TokenRange> ChunkNounPhrases(std::span<const ChunkSymbol> symbols,
                                         std::span<const TagPattern> patterns);

std::vector<TokenRange> ChunkNounPhrases(std::span<const TaggedToken> sentence,
                                         const TagSet& tagset,
                                         std::span<const TagPattern> patterns);

struct PhraseOccurrence {
  std::size_t sentence = 0;
  TokenRange tokens;

  bool operator==(const PhraseOccurrence&) const = default;
};

struct KeyPhraseCandidate {
  std::string normalized;
  // Distinct original-text renderings, sorted.
  std::vector<std::string> surfaces;
  std::size_t frequency = 0;
  std::vector<PhraseOccurrence> occurrences;
  // Byte ranges in the original (unmasked) text, one per occurrence.
  std::vector<ByteRange> spans;
  bool contains_formula = false;
};

// Normalizes chunks (case folding, witnessed plural stripping of the head,
// formula restoration), merges equal forms and sorts by descending frequency,
// then by normalized form.
std::vector<KeyPhraseCandidate> AggregateKeyphrases(
    const std::vector<std::vector<TokenRange>>& doc_chunks,
    const std::vector<TaggedSentence>& document, const MaskedText& masked);

// Drops stoplisted phrases and single-token phrases shorter than three
// characters. Throws Error(kWrongLexiconKind).
std::vector<KeyPhraseCandidate> FilterKeyphrases(
    std::vector<KeyPhraseCandidate> candidates, const Lexicon& stoplist);

}  // namespace mathtext

#endif  // MATHTEXT_PHRASES_H_
