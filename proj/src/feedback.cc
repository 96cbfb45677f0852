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

#include "mathtext/feedback.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

#include "mathtext/error.h"
#include "mathtext/text_util.h"

namespace mathtext {

namespace {

std::string RequiredString(const nlohmann::json& body, const char* field) {
  auto it = body.find(field);
  if (it == body.end() || !it->is_string()) {
    throw Error(ErrorCode::kValidation,
                std::string("field '") + field + "' must be a string");
  }
  std::string v = it->get<std::string>();
  if (v.empty()) {
    throw Error(ErrorCode::kValidation,
                std::string("field '") + field + "' is empty");
  }
  return v;
}

std::string StorageMessage(const std::string& what, const std::string& path) {
  return what + " " + path + ": " + std::strerror(errno);
}

}  // namespace

std::int64_t NowUtcSeconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

FeedbackRecord ParseFeedback(const nlohmann::json& body, std::int64_t now) {
  if (!body.is_object()) {
    throw Error(ErrorCode::kValidation, "feedback body must be an object");
  }
  FeedbackRecord r;
  r.timestamp = now;
  r.doc_id = RequiredString(body, "doc_id");
  const std::string kind = RequiredString(body, "item_kind");
  if (kind == "keyphrase") {
    r.item_kind = ItemKind::kKeyphrase;
  } else if (kind == "class") {
    r.item_kind = ItemKind::kClass;
  } else {
    throw Error(ErrorCode::kValidation, "item_kind must be keyphrase or class");
  }
  r.item_value = RequiredString(body, "item_value");
  const std::string verdict = RequiredString(body, "verdict");
  if (verdict == "accept") {
    r.verdict = Verdict::kAccept;
  } else if (verdict == "reject") {
    r.verdict = Verdict::kReject;
  } else {
    throw Error(ErrorCode::kValidation, "verdict must be accept or reject");
  }
  r.editor_id = RequiredString(body, "editor_id");
  return r;
}

std::string FormatFeedbackLine(const FeedbackRecord& record) {
  nlohmann::ordered_json j;
  j["timestamp"] = record.timestamp;
  j["doc_id"] = record.doc_id;
  j["item_kind"] = record.item_kind == ItemKind::kKeyphrase ? "keyphrase" : "class";
  j["item_value"] = record.item_value;
  j["verdict"] = record.verdict == Verdict::kAccept ? "accept" : "reject";
  j["editor_id"] = record.editor_id;
  return j.dump();
}

FeedbackLog::FeedbackLog(std::string path) : path_(std::move(path)) {}

void FeedbackLog::Append(const FeedbackRecord& record) {
  const std::string line = FormatFeedbackLine(record) + "\n";
  std::lock_guard<std::mutex> lock(mu_);
  const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC,
                        0644);
  if (fd < 0) {
    throw Error(ErrorCode::kStorageFailure, StorageMessage("cannot open", path_));
  }
  std::size_t done = 0;
  while (done < line.size()) {
    const ssize_t n = ::write(fd, line.data() + done, line.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      const std::string msg = StorageMessage("write failed on", path_);
      ::close(fd);
      throw Error(ErrorCode::kStorageFailure, msg);
    }
    done += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    const std::string msg = StorageMessage("fsync failed on", path_);
    ::close(fd);
    throw Error(ErrorCode::kStorageFailure, msg);
  }
  ::close(fd);
}

std::vector<FeedbackRecord> FeedbackLog::ReadAll(const std::string& path) {
  std::string contents = ReadFile(path);
  // Drop an incomplete last line written concurrently.
  const std::size_t last = contents.rfind('\n');
  contents.resize(last == std::string::npos ? 0 : last + 1);
  std::vector<FeedbackRecord> out;
  std::size_t line_no = 0;
  for (const auto& line : SplitLines(contents)) {
    ++line_no;
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line.begin(), line.end(), nullptr, false);
    if (j.is_discarded() || !j.contains("timestamp") ||
        !j["timestamp"].is_number_integer()) {
      throw Error(ErrorCode::kMalformedLine, "bad feedback record", line_no);
    }
    try {
      out.push_back(ParseFeedback(j, j["timestamp"].get<std::int64_t>()));
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedLine, e.what(), line_no);
    }
  }
  return out;
}

}  // namespace mathtext
