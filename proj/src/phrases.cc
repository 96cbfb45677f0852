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

#include "mathtext/phrases.h"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>

#include "mathtext/error.h"
#include "mathtext/text_util.h"

namespace mathtext {

namespace {

constexpr std::string_view kOfClass = "IN=of";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsAsciiSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsAsciiSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<ChunkSymbol> ParseClass(std::string_view text,
                                    const TagSet& tagset, bool lenient) {
  std::vector<ChunkSymbol> symbols;
  for (std::string_view tag : SplitOn(text, '|')) {
    if (tag == kOfClass) {
      symbols.push_back(OfSymbol(tagset));
    } else if (auto id = tagset.find(tag)) {
      symbols.push_back(*id);
    } else if (!lenient) {
      throw Error(ErrorCode::kBadPattern,
                  "unknown tag '" + std::string(tag) + "' in pattern");
    }
  }
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  return symbols;
}

TagPattern ParsePatternImpl(std::string_view line, const TagSet& tagset,
                            bool lenient) {
  std::size_t colon = line.find(':');
  if (colon == std::string_view::npos || Trim(line.substr(0, colon)).empty()) {
    throw Error(ErrorCode::kBadPattern, "pattern needs 'name:' prefix");
  }
  TagPattern pattern;
  pattern.name = std::string(Trim(line.substr(0, colon)));
  for (std::string_view item : SplitWhitespace(line.substr(colon + 1))) {
    PatternElement element;
    std::string_view cls = item;
    std::size_t brace = item.find('{');
    if (brace != std::string_view::npos) {
      if (item.back() != '}' || brace + 3 != item.size()) {
        throw Error(ErrorCode::kBadPattern,
                    "bad repetition in '" + std::string(item) + "'");
      }
      switch (item[brace + 1]) {
        case '1': element.repetition = Repetition::kOne; break;
        case '?': element.repetition = Repetition::kOptional; break;
        case '+': element.repetition = Repetition::kOneOrMore; break;
        case '*': element.repetition = Repetition::kZeroOrMore; break;
        default:
          throw Error(ErrorCode::kBadPattern,
                      "bad repetition in '" + std::string(item) + "'");
      }
      cls = item.substr(0, brace);
    }
    element.symbols = ParseClass(cls, tagset, lenient);
    if (element.symbols.empty() && element.Mandatory()) {
      throw Error(ErrorCode::kBadPattern,
                  "empty tag class in '" + std::string(item) + "'");
    }
    pattern.elements.push_back(std::move(element));
  }
  if (std::none_of(pattern.elements.begin(), pattern.elements.end(),
                   [](const PatternElement& e) { return e.Mandatory(); })) {
    throw Error(ErrorCode::kBadPattern,
                "pattern " + pattern.name + " has no mandatory element");
  }
  return pattern;
}

}  // namespace

std::vector<ChunkSymbol> ChunkSymbols(std::span<const TaggedToken> sentence,
                                      const TagSet& tagset) {
  auto in = tagset.find("IN");
  std::vector<ChunkSymbol> symbols;
  symbols.reserve(sentence.size());
  for (const auto& t : sentence) {
    if (in && t.tag == *in && CaseFold(t.token.surface) == "of") {
      symbols.push_back(OfSymbol(tagset));
    } else {
      symbols.push_back(t.tag);
    }
  }
  return symbols;
}

bool PatternElement::Accepts(ChunkSymbol s) const {
  return std::binary_search(symbols.begin(), symbols.end(), s);
}

std::size_t TagPattern::LongestMatch(std::span<const ChunkSymbol> symbols,
                                     std::size_t pos) const {
  // Set of reachable positions after each element.
  std::set<std::size_t> reach = {pos};
  for (const auto& e : elements) {
    std::set<std::size_t> next;
    for (std::size_t p : reach) {
      if (!e.Mandatory()) next.insert(p);
      if (e.repetition == Repetition::kOne ||
          e.repetition == Repetition::kOptional) {
        if (p < symbols.size() && e.Accepts(symbols[p])) next.insert(p + 1);
      } else {
        for (std::size_t q = p; q < symbols.size() && e.Accepts(symbols[q]);
             ++q) {
          next.insert(q + 1);
        }
      }
    }
    reach = std::move(next);
    if (reach.empty()) return 0;
  }
  return *reach.rbegin() - pos;
}

TagPattern ParsePattern(std::string_view line, const TagSet& tagset) {
  return ParsePatternImpl(line, tagset, /*lenient=*/false);
}

std::vector<TagPattern> ParsePatterns(std::string_view contents,
                                      const TagSet& tagset) {
  std::vector<TagPattern> patterns;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(contents)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    try {
      patterns.push_back(ParsePattern(line, tagset));
    } catch (const Error& e) {
      throw Error(ErrorCode::kBadPattern, e.what(), line_no);
    }
  }
  if (patterns.empty()) {
    throw Error(ErrorCode::kBadPattern, "no patterns defined", line_no + 1);
  }
  return patterns;
}

std::vector<TagPattern> DefaultPatterns(const TagSet& tagset) {
  constexpr std::string_view kNp1 =
      "JJ|VBN|VBG{*} NN|NNS|NNP|NNPS|FORMULA{+}";
  std::string np1 = "NP1: " + std::string(kNp1);
  std::string np2 = "NP2: " + std::string(kNp1) + " IN=of{1} " +
                    std::string(kNp1);
  return {ParsePatternImpl(np1, tagset, true),
          ParsePatternImpl(np2, tagset, true)};
}

std::vector<TokenRange> ChunkNounPhrases(std::span<const ChunkSymbol> symbols,
                                         std::span<const TagPattern> patterns) {
  std::vector<TokenRange> ranges;
  std::size_t i = 0;
  while (i < symbols.size()) {
    std::size_t best = 0;
    for (const auto& p : patterns) {
      best = std::max(best, p.LongestMatch(symbols, i));
    }
    if (best == 0) {
      ++i;
      continue;
    }
    ranges.push_back({i, i + best});
    i += best;
  }
  return ranges;
}

std::vector<TokenRange> ChunkNounPhrases(std::span<const TaggedToken> sentence,
                                         const TagSet& tagset,
                                         std::span<const TagPattern> patterns) {
  auto symbols = ChunkSymbols(sentence, tagset);
  return ChunkNounPhrases(symbols, patterns);
}

std::vector<KeyPhraseCandidate> AggregateKeyphrases(
    const std::vector<std::vector<TokenRange>>& doc_chunks,
    const std::vector<TaggedSentence>& document, const MaskedText& masked) {
  std::unordered_set<std::string> words;
  for (const auto& sentence : document) {
    for (const auto& t : sentence) {
      if (t.token.kind != TokenKind::kFormula) {
        words.insert(CaseFold(t.token.surface));
      }
    }
  }

  std::map<std::string, KeyPhraseCandidate> merged;
  for (std::size_t s = 0; s < doc_chunks.size() && s < document.size(); ++s) {
    const auto& sentence = document[s];
    for (const TokenRange& r : doc_chunks[s]) {
      if (r.empty() || r.end > sentence.size()) continue;
      std::vector<std::string> parts;
      bool has_formula = false;
      for (std::size_t i = r.begin; i < r.end; ++i) {
        const Token& tok = sentence[i].token;
        if (tok.kind == TokenKind::kFormula) {
          has_formula = true;
          parts.push_back(masked.Restore(tok.span.begin, tok.surface));
        } else {
          parts.push_back(CaseFold(tok.surface));
        }
      }
      const Token& head = sentence[r.end - 1].token;
      std::string& last = parts.back();
      if (head.kind != TokenKind::kFormula && last.size() > 1 &&
          last.back() == 's' && last[last.size() - 2] != 's' &&
          words.count(last.substr(0, last.size() - 1))) {
        last.pop_back();
      }
      std::string normalized;
      for (const auto& p : parts) {
        if (!normalized.empty()) normalized += ' ';
        normalized += p;
      }

      std::size_t b = sentence[r.begin].token.span.begin;
      std::size_t e = sentence[r.end - 1].token.span.end;
      std::string surface = masked.Restore(
          b, std::string_view(masked.text).substr(b, e - b));

      auto& c = merged[normalized];
      c.normalized = normalized;
      c.occurrences.push_back({s, r});
      c.spans.push_back(masked.ToOriginal({b, e}));
      c.frequency = c.occurrences.size();
      c.contains_formula = c.contains_formula || has_formula;
      if (!std::count(c.surfaces.begin(), c.surfaces.end(), surface)) {
        c.surfaces.push_back(std::move(surface));
      }
    }
  }

  std::vector<KeyPhraseCandidate> out;
  out.reserve(merged.size());
  for (auto& [key, c] : merged) {
    std::sort(c.surfaces.begin(), c.surfaces.end());
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const KeyPhraseCandidate& a, const KeyPhraseCandidate& b) {
                     return a.frequency > b.frequency;
                   });
  return out;
}

std::vector<KeyPhraseCandidate> FilterKeyphrases(
    std::vector<KeyPhraseCandidate> candidates, const Lexicon& stoplist) {
  if (stoplist.kind() != LexiconKind::kPhraseStoplist) {
    throw Error(ErrorCode::kWrongLexiconKind,
                "keyphrase filtering needs a phrase_stoplist lexicon");
  }
  std::erase_if(candidates, [&](const KeyPhraseCandidate& c) {
    if (stoplist.find(c.normalized)) return true;
    bool single = !c.occurrences.empty() && c.occurrences[0].tokens.size() == 1;
    return single && Utf8Length(c.normalized) < 3;
  });
  return candidates;
}

}  // namespace mathtext
