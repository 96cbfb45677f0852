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

#ifndef MATHTEXT_MODEL_IO_H_
#define MATHTEXT_MODEL_IO_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mathtext {

// Line reader for the versioned text model formats (`HMM v1`, `NB v1`,
// `SVM v1`). Every failure is reported as Error(kCorruptFile) with the byte
// offset of the offending line, or Error(kVersionMismatch) for a known magic
// with an unsupported version.
class ModelReader {
 public:
  ModelReader(std::string_view contents, std::string_view magic,
              int version);

  // Next line without its newline. Fails at end of input.
  std::string_view Next();
  bool AtEnd() const { return pos_ >= contents_.size(); }

  // Reads a line `name<TAB>...` and returns its columns after the name.
  std::vector<std::string_view> Section(std::string_view name);
  void ExpectEnd();

  std::size_t ParseCount(std::string_view s) const;
  double ParseValue(std::string_view s) const;

  [[noreturn]] void Fail(const std::string& message) const;

 private:
  std::string_view contents_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
};

// Backslash-escapes TAB, newline, carriage return and backslash so that an
// arbitrary string fits in one TAB-separated column.
std::string EscapeField(std::string_view s);
// Inverse of EscapeField; returns false on a dangling or unknown escape.
bool UnescapeField(std::string_view s, std::string* out);

// "tag:value" pairs as written by the model writers.
std::string FormatIndexedValue(std::size_t index, double value);

}  // namespace mathtext

#endif  // MATHTEXT_MODEL_IO_H_
