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

#ifndef MATHTEXT_ERROR_H_
#define MATHTEXT_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mathtext {

enum class ErrorCode {
  kIo,
  kUnknownTag,
  kMalformedLine,
  kEmptyCorpus,
  kDuplicateKey,
  kDuplicateCode,
  kTooFewClasses,
  kUnknownLabel,
  kUnbalancedDelimiter,
  kKnownToken,
  kWrongLexiconKind,
  kNonPositiveAlpha,
  kSingleClassCorpus,
  kEmptyTestSet,
  kModelNotLoaded,
  kVersionMismatch,
  kCorruptFile,
  kStorageFailure,
  kValidation,
  kBadPattern,
};

// Stable name used in CLI messages and in the HTTP error body.
std::string_view ErrorCodeName(ErrorCode code);

// Every failure in the library is reported as an Error. Parsing errors carry
// a 1-based line number, masking and model-file errors a byte offset.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message);
  Error(ErrorCode code, std::string message, std::size_t line);

  static Error AtOffset(ErrorCode code, std::string message,
                        std::size_t byte_offset);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> byte_offset() const { return byte_offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> byte_offset_;
};

}  // namespace mathtext

#endif  // MATHTEXT_ERROR_H_
