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

#ifndef MATHTEXT_HTTP_SERVICE_H_
#define MATHTEXT_HTTP_SERVICE_H_

#include <memory>
#include <string>
#include <string_view>

#include "mathtext/error.h"
#include "mathtext/feedback.h"
#include "mathtext/pipeline.h"

namespace mathtext {

struct HttpReply {
  int status = 200;
  std::string body;  // JSON
};

// Request handlers, independent of the transport.
class ApiHandlers {
 public:
  ApiHandlers(const Pipeline& pipeline, FeedbackLog& log);

  HttpReply Analyze(std::string_view body) const;
  HttpReply Feedback(std::string_view body);
  HttpReply Health() const;
  HttpReply Scheme() const;

 private:
  const Pipeline& pipeline_;
  FeedbackLog& log_;
};

int HttpStatusFor(ErrorCode code);

class HttpServer {
 public:
  HttpServer(const Pipeline& pipeline, FeedbackLog& log);
  ~HttpServer();

  // Binds to an ephemeral port and returns it, or -1.
  int BindToAnyPort(const std::string& host = "127.0.0.1");
  bool Bind(const std::string& host, int port);
  // Blocks until Stop() is called.
  bool ListenAfterBind();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mathtext

#endif  // MATHTEXT_HTTP_SERVICE_H_
