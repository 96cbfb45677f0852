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

#include "mathtext/http_service.h"

#include "httplib.h"
#include "json.hpp"
#include "mathtext/error.h"
#include "mathtext/result_json.h"

namespace mathtext {

namespace {

HttpReply ErrorReply(const Error& e) {
  return {HttpStatusFor(e.code()), ErrorToJson(e).dump()};
}

HttpReply BadRequest(std::string message) {
  Json j{{"error", std::move(message)}, {"code", "BadRequest"}};
  return {400, j.dump()};
}

HttpReply Internal(const std::exception& e) {
  Json j{{"error", e.what()}, {"code", "Internal"}};
  return {500, j.dump()};
}

bool ParseBody(std::string_view body, nlohmann::json& out) {
  out = nlohmann::json::parse(body.begin(), body.end(), nullptr, false);
  return !out.is_discarded() && out.is_object();
}

}  // namespace

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation:
    case ErrorCode::kUnbalancedDelimiter:
      return 422;
    case ErrorCode::kModelNotLoaded:
      return 503;
    default:
      return 500;
  }
}

ApiHandlers::ApiHandlers(const Pipeline& pipeline, FeedbackLog& log)
    : pipeline_(pipeline), log_(log) {}

HttpReply ApiHandlers::Analyze(std::string_view body) const {
  nlohmann::json req;
  if (!ParseBody(body, req)) return BadRequest("body must be a JSON object");
  try {
    auto text = req.find("text");
    if (text == req.end() || !text->is_string()) {
      throw Error(ErrorCode::kValidation, "field 'text' must be a string");
    }
    std::string doc_id;
    if (auto id = req.find("doc_id"); id != req.end()) {
      if (!id->is_string()) {
        throw Error(ErrorCode::kValidation, "field 'doc_id' must be a string");
      }
      doc_id = id->get<std::string>();
    }
    AnalysisResult r = pipeline_.Analyze(text->get<std::string>(), doc_id);
    return {200, SerializeResult(r, pipeline_.resources().tagger.tagset())};
  } catch (const Error& e) {
    return ErrorReply(e);
  } catch (const std::exception& e) {
    return Internal(e);
  }
}

HttpReply ApiHandlers::Feedback(std::string_view body) {
  nlohmann::json req;
  if (!ParseBody(body, req)) return BadRequest("body must be a JSON object");
  try {
    log_.Append(ParseFeedback(req, NowUtcSeconds()));
    return {200, Json{{"ok", true}}.dump()};
  } catch (const Error& e) {
    return ErrorReply(e);
  } catch (const std::exception& e) {
    return Internal(e);
  }
}

HttpReply ApiHandlers::Health() const {
  const auto& res = pipeline_.resources();
  bool ready = true;
  for (ClassifierMethod m : res.methods) {
    ready &= m == ClassifierMethod::kNaiveBayes ? res.naive_bayes.has_value()
                                                : res.svm.has_value();
  }
  Json j{{"status", ready ? "ok" : "degraded"},
         {"pipeline_version", PipelineVersion()}};
  return {200, j.dump()};
}

HttpReply ApiHandlers::Scheme() const {
  return {200, SchemeToJson(pipeline_.scheme()).dump()};
}

struct HttpServer::Impl {
  Impl(const Pipeline& p, FeedbackLog& log) : api(p, log) {
    auto send = [](httplib::Response& res, const HttpReply& r) {
      res.status = r.status;
      res.set_content(r.body, "application/json; charset=utf-8");
    };
    server.Post("/v1/analyze",
                [this, send](const httplib::Request& req, httplib::Response& res) {
                  send(res, api.Analyze(req.body));
                });
    server.Post("/v1/feedback",
                [this, send](const httplib::Request& req, httplib::Response& res) {
                  send(res, api.Feedback(req.body));
                });
    server.Get("/v1/health",
               [this, send](const httplib::Request&, httplib::Response& res) {
                 send(res, api.Health());
               });
    server.Get("/v1/scheme",
               [this, send](const httplib::Request&, httplib::Response& res) {
                 send(res, api.Scheme());
               });
  }
  ApiHandlers api;
  httplib::Server server;
};

HttpServer::HttpServer(const Pipeline& pipeline, FeedbackLog& log)
    : impl_(std::make_unique<Impl>(pipeline, log)) {}

HttpServer::~HttpServer() = default;

int HttpServer::BindToAnyPort(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpServer::Bind(const std::string& host, int port) {
  return impl_->server.bind_to_port(host, port);
}

bool HttpServer::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() { impl_->server.stop(); }

void HttpServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace mathtext
