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

#include "mathtext/textprep.h"

#include <algorithm>
#include <array>

#include "mathtext/error.h"

namespace mathtext {

namespace {

bool ContainsPlaceholderLike(std::string_view text, std::string_view prefix) {
  std::size_t pos = 0;
  while ((pos = text.find(prefix, pos)) != std::string_view::npos) {
    std::size_t after = pos + prefix.size();
    if (after < text.size() && IsAsciiDigit(text[after])) return true;
    ++pos;
  }
  return false;
}

// Finds a single-dollar or double-dollar closer at or after `from`, skipping
// backslash escapes. Returns npos if absent.
std::size_t FindDollarCloser(std::string_view text, std::size_t from,
                             std::string_view closer) {
  std::size_t j = from;
  while (j < text.size()) {
    if (text[j] == '\\') {
      j += 2;
      continue;
    }
    if (text.substr(j, closer.size()) == closer) return j;
    ++j;
  }
  return std::string_view::npos;
}

bool IsSentenceFinal(char c) { return c == '.' || c == '?' || c == '!'; }

bool IsPunctuationByte(char c) {
  static constexpr std::string_view kPunct = ".,;:!?()[]{}\"'`-";
  return kPunct.find(c) != std::string_view::npos;
}

// True when the '.' at `dot` ends an abbreviation that must not close a
// sentence.
bool EndsAbbreviation(std::string_view text, std::size_t dot) {
  std::size_t start = dot;
  while (start > 0 && !IsAsciiSpace(text[start - 1])) --start;
  std::string_view word = text.substr(start, dot - start);
  while (!word.empty() && (word.front() == '(' || word.front() == '[' ||
                           word.front() == '"' || word.front() == '`')) {
    word.remove_prefix(1);
  }
  if (word.size() == 1 && IsAsciiUpper(word[0])) return true;
  static constexpr std::array<std::string_view, 7> kAbbrev = {
      "e.g", "i.e", "cf", "Cf", "Prof", "Dr", "E.g"};
  for (std::string_view a : kAbbrev) {
    if (word == a) return true;
  }
  if (word == "al") {
    std::size_t p = start;
    while (p > 0 && IsAsciiSpace(text[p - 1])) --p;
    std::size_t q = p;
    while (q > 0 && !IsAsciiSpace(text[q - 1])) --q;
    if (text.substr(q, p - q) == "et") return true;
  }
  return false;
}

bool IsAlnumByte(char c) { return IsWordByte(c) || IsAsciiDigit(c); }

class TokenizerImpl {
 public:
  TokenizerImpl(std::string_view text, std::size_t base,
                std::string_view prefix, std::span<const ByteRange> spans)
      : text_(text), base_(base), prefix_(prefix), spans_(spans) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    std::size_t next_span = 0;
    while (next_span < spans_.size() && spans_[next_span].end <= base_) {
      ++next_span;
    }
    std::size_t i = 0;
    while (i < text_.size()) {
      std::size_t limit = text_.size();
      if (next_span < spans_.size()) {
        std::size_t b = spans_[next_span].begin - base_;
        if (i == b) {
          std::size_t e = std::min(spans_[next_span].end - base_, text_.size());
          Emit(tokens, i, e, TokenKind::kFormula);
          i = e;
          ++next_span;
          continue;
        }
        limit = std::min(limit, b);
      }
      char c = text_[i];
      if (IsAsciiSpace(c)) {
        ++i;
        continue;
      }
      if (IsAlnumByte(c)) {
        i = ScanRun(tokens, i, limit);
        continue;
      }
      // Clitics such as 's directly after a word.
      if (c == '\'' && !tokens.empty() && tokens.back().span.end == base_ + i &&
          tokens.back().kind == TokenKind::kWord && i + 1 < limit &&
          IsWordByte(text_[i + 1])) {
        std::size_t j = i + 1;
        while (j < limit && IsWordByte(text_[j])) ++j;
        Emit(tokens, i, j, TokenKind::kWord);
        i = j;
        continue;
      }
      Emit(tokens, i, i + 1,
           IsPunctuationByte(c) ? TokenKind::kPunctuation : TokenKind::kSymbol);
      ++i;
    }
    return tokens;
  }

 private:
  std::size_t ScanRun(std::vector<Token>& tokens, std::size_t start,
                      std::size_t limit) {
    bool all_numeric = true;
    bool seen_point = false;
    std::size_t j = start;
    while (j < limit) {
      char c = text_[j];
      if (IsAlnumByte(c)) {
        if (!IsAsciiDigit(c)) all_numeric = false;
        ++j;
        continue;
      }
      bool next_alnum = j + 1 < limit && IsAlnumByte(text_[j + 1]);
      if (c == '-' && next_alnum) {
        all_numeric = false;
        ++j;
        continue;
      }
      if (c == '.' && all_numeric && !seen_point && j + 1 < limit &&
          IsAsciiDigit(text_[j + 1])) {
        seen_point = true;
        ++j;
        continue;
      }
      break;
    }
    TokenKind kind = all_numeric ? TokenKind::kNumber : TokenKind::kWord;
    if (spans_.empty() && kind == TokenKind::kWord &&
        IsPlaceholder(text_.substr(start, j - start))) {
      kind = TokenKind::kFormula;
    }
    Emit(tokens, start, j, kind);
    return j;
  }

  bool IsPlaceholder(std::string_view w) const {
    if (w.size() <= prefix_.size() || w.substr(0, prefix_.size()) != prefix_) {
      return false;
    }
    return std::all_of(w.begin() + static_cast<std::ptrdiff_t>(prefix_.size()),
                       w.end(), IsAsciiDigit);
  }

  void Emit(std::vector<Token>& tokens, std::size_t b, std::size_t e,
            TokenKind kind) {
    tokens.push_back({std::string(text_.substr(b, e - b)),
                      {base_ + b, base_ + e},
                      kind});
  }

  std::string_view text_;
  std::size_t base_;
  std::string_view prefix_;
  std::span<const ByteRange> spans_;
};

}  // namespace

std::size_t MaskedText::ToOriginalOffset(std::size_t masked_offset) const {
  std::ptrdiff_t delta = 0;
  for (const auto& f : formula_table) {
    if (f.masked_span.end > masked_offset) break;
    delta += static_cast<std::ptrdiff_t>(f.original_span.size()) -
             static_cast<std::ptrdiff_t>(f.masked_span.size());
  }
  return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(masked_offset) +
                                  delta);
}

ByteRange MaskedText::ToOriginal(ByteRange masked) const {
  return {ToOriginalOffset(masked.begin), ToOriginalOffset(masked.end)};
}

std::vector<ByteRange> MaskedText::PlaceholderSpans() const {
  std::vector<ByteRange> spans;
  spans.reserve(formula_table.size());
  for (const auto& f : formula_table) spans.push_back(f.masked_span);
  return spans;
}

std::string MaskedText::Restore(std::size_t masked_begin,
                                std::string_view masked_slice) const {
  std::string out;
  std::size_t pos = masked_begin;
  std::size_t end = masked_begin + masked_slice.size();
  for (const auto& f : formula_table) {
    if (f.masked_span.end <= pos) continue;
    if (f.masked_span.begin >= end) break;
    out.append(masked_slice.substr(pos - masked_begin,
                                   f.masked_span.begin - pos));
    out += f.tex_source;
    pos = f.masked_span.end;
  }
  if (pos < end) out.append(masked_slice.substr(pos - masked_begin));
  return out;
}

MaskedText MaskFormulae(std::string_view text) {
  MaskedText masked;
  while (ContainsPlaceholderLike(text, masked.placeholder_prefix)) {
    masked.placeholder_prefix.insert(0, 1, 'Q');
  }
  std::string& out = masked.text;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    std::size_t close_end = std::string_view::npos;
    if (c == '\\' && i + 1 < text.size()) {
      char next = text[i + 1];
      if (next == '(' || next == '[') {
        std::string_view closer = next == '(' ? "\\)" : "\\]";
        std::size_t pos = text.find(closer, i + 2);
        if (pos == std::string_view::npos) {
          throw Error::AtOffset(ErrorCode::kUnbalancedDelimiter,
                                "math opener is never closed", i);
        }
        close_end = pos + 2;
      } else {
        out.append(text.substr(i, 2));
        i += 2;
        continue;
      }
    } else if (c == '$') {
      bool display = i + 1 < text.size() && text[i + 1] == '$';
      std::string_view closer = display ? "$$" : "$";
      std::size_t pos = FindDollarCloser(text, i + closer.size(), closer);
      if (pos == std::string_view::npos) {
        throw Error::AtOffset(ErrorCode::kUnbalancedDelimiter,
                              "math opener is never closed", i);
      }
      close_end = pos + closer.size();
    } else {
      out += c;
      ++i;
      continue;
    }
    FormulaEntry entry;
    entry.placeholder = masked.placeholder_prefix +
                        std::to_string(masked.formula_table.size());
    entry.tex_source = std::string(text.substr(i, close_end - i));
    entry.original_span = {i, close_end};
    entry.masked_span = {out.size(), out.size() + entry.placeholder.size()};
    out += entry.placeholder;
    masked.formula_table.push_back(std::move(entry));
    i = close_end;
  }
  return masked;
}

std::string Unmask(const MaskedText& masked) {
  return masked.Restore(0, masked.text);
}

std::vector<ByteRange> SegmentSentences(std::string_view text) {
  std::vector<ByteRange> ranges;
  std::size_t i = 0;
  auto skip_space = [&](std::size_t p) {
    while (p < text.size() && IsAsciiSpace(text[p])) ++p;
    return p;
  };
  std::size_t start = skip_space(0);
  i = start;
  while (i < text.size()) {
    if (IsSentenceFinal(text[i]) && i + 1 < text.size() &&
        IsAsciiSpace(text[i + 1])) {
      std::size_t next = skip_space(i + 1);
      if (next < text.size() &&
          (IsAsciiUpper(text[next]) || IsAsciiDigit(text[next])) &&
          !(text[i] == '.' && EndsAbbreviation(text, i))) {
        ranges.push_back({start, i + 1});
        start = next;
        i = next;
        continue;
      }
    }
    ++i;
  }
  std::size_t end = text.size();
  while (end > start && IsAsciiSpace(text[end - 1])) --end;
  if (end > start) ranges.push_back({start, end});
  return ranges;
}

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kNumber: return "number";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kFormula: return "formula";
    case TokenKind::kSymbol: return "symbol";
  }
  return "unknown";
}

std::vector<Token> Tokenize(std::string_view text, std::size_t base_offset,
                            std::string_view placeholder_prefix) {
  return TokenizerImpl(text, base_offset, placeholder_prefix, {}).Run();
}

std::vector<Token> Tokenize(std::string_view text, std::size_t base_offset,
                            std::span<const ByteRange> placeholder_spans) {
  if (placeholder_spans.empty()) {
    // No placeholders in the document: nothing may become a formula token.
    return TokenizerImpl(text, base_offset, std::string_view("\x01"), {})
        .Run();
  }
  return TokenizerImpl(text, base_offset, {}, placeholder_spans).Run();
}

std::vector<std::vector<Token>> TokenizeDocument(const MaskedText& masked) {
  std::vector<ByteRange> spans = masked.PlaceholderSpans();
  std::vector<std::vector<Token>> sentences;
  for (ByteRange r : SegmentSentences(masked.text)) {
    auto tokens = Tokenize(std::string_view(masked.text).substr(r.begin, r.size()),
                           r.begin, spans);
    if (!tokens.empty()) sentences.push_back(std::move(tokens));
  }
  return sentences;
}

}  // namespace mathtext
