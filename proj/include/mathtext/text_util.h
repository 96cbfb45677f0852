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

#ifndef MATHTEXT_TEXT_UTIL_H_
#define MATHTEXT_TEXT_UTIL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mathtext {

// Half-open byte range [begin, end).
struct ByteRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool operator==(const ByteRange&) const = default;
};

// Lower-cases ASCII letters and the Latin-1 supplement capitals (U+00C0 to
// U+00DE except U+00D7). Other bytes are copied unchanged.
std::string CaseFold(std::string_view s);

// Number of UTF-8 code points (continuation bytes are not counted).
std::size_t Utf8Length(std::string_view s);

std::vector<std::string_view> SplitOn(std::string_view s, char sep);

// Splits on runs of ASCII whitespace, dropping empty pieces.
std::vector<std::string_view> SplitWhitespace(std::string_view s);

inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
// Letters for tokenization purposes: ASCII letters and any non-ASCII byte.
inline bool IsWordByte(char c) {
  return IsAsciiUpper(c) || IsAsciiLower(c) ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool ContainsWhitespace(std::string_view s);

// Shortest round-trip form is not required; 17 significant digits are.
std::string FormatDouble(double v);

// Parses a double written by FormatDouble (accepts inf/-inf). Returns false on
// trailing garbage.
bool ParseDouble(std::string_view s, double* out);

// Reads a whole file as bytes; throws Error(kIo) on failure.
std::string ReadFile(const std::string& path);

// Writes bytes to a file, replacing it; throws Error(kIo) on failure.
void WriteFile(const std::string& path, std::string_view contents);

// Splits file contents into lines. A trailing "\r" is stripped from each line.
// A final newline does not produce an extra empty line.
std::vector<std::string_view> SplitLines(std::string_view contents);

}  // namespace mathtext

#endif  // MATHTEXT_TEXT_UTIL_H_
