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

#include "mathtext/model_io.h"

#include <charconv>

#include "mathtext/error.h"
#include "mathtext/text_util.h"

namespace mathtext {

ModelReader::ModelReader(std::string_view contents, std::string_view magic,
                         int version)
    : contents_(contents) {
  std::string_view header = Next();
  std::string prefix = std::string(magic) + " v";
  if (header.substr(0, prefix.size()) != prefix) {
    line_start_ = 0;
    Fail("missing '" + prefix + "' header");
  }
  if (header != prefix + std::to_string(version)) {
    throw Error(ErrorCode::kVersionMismatch,
                "unsupported model version '" + std::string(header) +
                    "', expected " + prefix + std::to_string(version));
  }
}

std::string_view ModelReader::Next() {
  if (AtEnd()) {
    line_start_ = contents_.size();
    Fail("unexpected end of file");
  }
  line_start_ = pos_;
  std::size_t nl = contents_.find('\n', pos_);
  if (nl == std::string_view::npos) {
    // Every line written by the model writers ends with a newline.
    line_start_ = contents_.size();
    Fail("truncated line");
  }
  std::string_view line = contents_.substr(pos_, nl - pos_);
  pos_ = nl + 1;
  return line;
}

std::vector<std::string_view> ModelReader::Section(std::string_view name) {
  auto cols = SplitOn(Next(), '\t');
  if (cols[0] != name) Fail("expected section " + std::string(name));
  cols.erase(cols.begin());
  return cols;
}

void ModelReader::ExpectEnd() {
  if (Next() != "END") Fail("expected END");
  if (!AtEnd()) {
    line_start_ = pos_;
    Fail("trailing data after END");
  }
}

std::size_t ModelReader::ParseCount(std::string_view s) const {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    Fail("bad integer '" + std::string(s) + "'");
  }
  return v;
}

double ModelReader::ParseValue(std::string_view s) const {
  double v = 0;
  if (!ParseDouble(s, &v)) Fail("bad number '" + std::string(s) + "'");
  return v;
}

void ModelReader::Fail(const std::string& message) const {
  throw Error::AtOffset(ErrorCode::kCorruptFile, message, line_start_);
}

std::string EscapeField(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

bool UnescapeField(std::string_view s, std::string* out) {
  out->clear();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      *out += s[i];
      continue;
    }
    if (++i == s.size()) return false;
    switch (s[i]) {
      case '\\': *out += '\\'; break;
      case 't': *out += '\t'; break;
      case 'n': *out += '\n'; break;
      case 'r': *out += '\r'; break;
      default: return false;
    }
  }
  return true;
}

std::string FormatIndexedValue(std::size_t index, double value) {
  return std::to_string(index) + ":" + FormatDouble(value);
}

}  // namespace mathtext
