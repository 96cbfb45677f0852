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

#ifndef MATHTEXT_TEXTPREP_H_
#define MATHTEXT_TEXTPREP_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mathtext/text_util.h"

namespace mathtext {

struct FormulaEntry {
  std::string placeholder;
  // The math segment verbatim, delimiters included.
  std::string tex_source;
  ByteRange original_span;
  ByteRange masked_span;
};

// Text with every TeX math segment replaced by a placeholder noun
// (MATHF0, MATHF1, ... in order of occurrence).
struct MaskedText {
  std::string text;
  std::vector<FormulaEntry> formula_table;
  // "MATHF" unless the input already contained MATHF<digit>, in which case
  // it is prefixed with enough 'Q's to be absent from the input.
  std::string placeholder_prefix = "MATHF";

  // Maps a masked-text offset that is not strictly inside a placeholder to
  // the corresponding offset in the original text.
  std::size_t ToOriginalOffset(std::size_t masked_offset) const;
  ByteRange ToOriginal(ByteRange masked) const;

  // Masked spans of all placeholders, in order.
  std::vector<ByteRange> PlaceholderSpans() const;

  // Replaces placeholders inside `masked_slice` (which starts at
  // `masked_begin`) by their TeX source.
  std::string Restore(std::size_t masked_begin,
                      std::string_view masked_slice) const;
};

// Replaces `$...$`, `$$...$$`, `\(...\)` and `\[...\]` segments, scanning left
// to right with the first closing delimiter winning. A backslash-escaped
// dollar is literal text. Throws Error(kUnbalancedDelimiter) with the byte
// offset of an opener that is never closed.
MaskedText MaskFormulae(std::string_view text);

// Byte-exact inverse of MaskFormulae.
std::string Unmask(const MaskedText& masked);

// Sentence byte ranges over masked text. A boundary follows '.', '?' or '!'
// when whitespace and then an uppercase letter or digit come next, unless the
// period ends a known abbreviation or a single capital initial.
std::vector<ByteRange> SegmentSentences(std::string_view masked_text);

enum class TokenKind { kWord, kNumber, kPunctuation, kFormula, kSymbol };

std::string_view TokenKindName(TokenKind kind);

struct Token {
  std::string surface;
  // Byte range into the masked text.
  ByteRange span;
  TokenKind kind = TokenKind::kWord;

  bool operator==(const Token&) const = default;
};

// Tokenizes `text`, whose first byte sits at `base_offset` in the masked
// document. Placeholders are recognized by `placeholder_prefix` followed by
// digits.
std::vector<Token> Tokenize(std::string_view text, std::size_t base_offset = 0,
                            std::string_view placeholder_prefix = "MATHF");

// Same, but formula tokens are exactly the given placeholder spans (document
// coordinates), so placeholders glued to neighbouring letters or digits are
// still split off.
std::vector<Token> Tokenize(std::string_view text, std::size_t base_offset,
                            std::span<const ByteRange> placeholder_spans);

// Segments and tokenizes a whole masked document.
std::vector<std::vector<Token>> TokenizeDocument(const MaskedText& masked);

}  // namespace mathtext

#endif  // MATHTEXT_TEXTPREP_H_
