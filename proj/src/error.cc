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

#include "mathtext/error.h"

#include <utility>

namespace mathtext {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kUnknownTag: return "UnknownTag";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kDuplicateKey: return "DuplicateKey";
    case ErrorCode::kDuplicateCode: return "DuplicateCode";
    case ErrorCode::kTooFewClasses: return "TooFewClasses";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kUnbalancedDelimiter: return "UnbalancedDelimiter";
    case ErrorCode::kKnownToken: return "KnownToken";
    case ErrorCode::kWrongLexiconKind: return "WrongLexiconKind";
    case ErrorCode::kNonPositiveAlpha: return "NonPositiveAlpha";
    case ErrorCode::kSingleClassCorpus: return "SingleClassCorpus";
    case ErrorCode::kEmptyTestSet: return "EmptyTestSet";
    case ErrorCode::kModelNotLoaded: return "ModelNotLoaded";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kCorruptFile: return "CorruptFile";
    case ErrorCode::kStorageFailure: return "StorageFailure";
    case ErrorCode::kValidation: return "Validation";
    case ErrorCode::kBadPattern: return "BadPattern";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message)
    : std::runtime_error(std::move(message)), code_(code) {}

Error::Error(ErrorCode code, std::string message, std::size_t line)
    : std::runtime_error(std::move(message) + " (line " +
                         std::to_string(line) + ")"),
      code_(code),
      line_(line) {}

Error Error::AtOffset(ErrorCode code, std::string message,
                      std::size_t byte_offset) {
  Error e(code, std::move(message) + " (byte " + std::to_string(byte_offset) +
                    ")");
  e.byte_offset_ = byte_offset;
  return e;
}

}  // namespace mathtext
