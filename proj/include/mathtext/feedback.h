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

#ifndef MATHTEXT_FEEDBACK_H_
#define MATHTEXT_FEEDBACK_H_

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"

namespace mathtext {

enum class ItemKind { kKeyphrase, kClass };
enum class Verdict { kAccept, kReject };

struct FeedbackRecord {
  std::int64_t timestamp = 0;  // UTC seconds
  std::string doc_id;
  ItemKind item_kind = ItemKind::kKeyphrase;
  std::string item_value;
  Verdict verdict = Verdict::kReject;
  std::string editor_id;
  bool operator==(const FeedbackRecord&) const = default;
};

std::int64_t NowUtcSeconds();

// Validates a submitted body; the timestamp is taken from `now`.
// Throws Error(kValidation) naming the offending field.
FeedbackRecord ParseFeedback(const nlohmann::json& body, std::int64_t now);

// One line, no trailing newline, keys in a fixed order.
std::string FormatFeedbackLine(const FeedbackRecord& record);

// Append-only JSONL log. Appends from any thread are serialized and flushed
// to disk before Append returns.
class FeedbackLog {
 public:
  explicit FeedbackLog(std::string path);

  const std::string& path() const { return path_; }

  // Throws Error(kStorageFailure).
  void Append(const FeedbackRecord& record);

  // Complete lines only; a partially written tail is ignored.
  static std::vector<FeedbackRecord> ReadAll(const std::string& path);

 private:
  std::string path_;
  std::mutex mu_;
};

}  // namespace mathtext

#endif  // MATHTEXT_FEEDBACK_H_
