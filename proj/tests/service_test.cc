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

#include <sys/stat.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "mathtext/error.h"
#include "mathtext/feedback.h"
#include "mathtext/http_service.h"
#include "mathtext/pipeline.h"
#include "mathtext/result_json.h"
#include "support/fixtures.h"

namespace mt = mathtext;
using nlohmann::json;

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const mt::TagSet& Tags() { return mt::testing::FixturePipeline().resources().tagger.tagset(); }

mt::PipelineResources WithoutClassifiers() {
  auto res = mt::testing::FixturePipeline().resources();
  res.naive_bayes.reset();
  res.svm.reset();
  return res;
}

}  // namespace

TEST_CASE("empty input") {
  const auto& p = mt::testing::FixturePipeline();
  for (const char* text : {"", "   \n\t "}) {
    auto r = p.Analyze(text);
    CHECK(r.keyphrases.empty());
    CHECK(r.unknown_tokens.entries.empty());
    CHECK(r.entities.empty());
    REQUIRE(r.proposals.size() == 2);
    const auto& nb = *p.resources().naive_bayes;
    // Naive Bayes with no evidence returns the prior.
    for (const auto& s : r.proposals[0].ranked) {
      const std::size_t c = std::find(nb.classes.begin(), nb.classes.end(), s.code) - nb.classes.begin();
      CHECK(s.score == doctest::Approx(std::exp(nb.log_prior[c])));
    }
  }
}

TEST_CASE("repeated formula phrase is aggregated") {
  const auto& p = mt::testing::FixturePipeline();
  const std::string text = ReadFile(mt::testing::SourcePath("tests/data/abstract_lp.txt"));
  auto r = p.Analyze(text, "lp");
  const mt::KeyPhraseCandidate* lp = nullptr;
  for (const auto& k : r.keyphrases) {
    if (std::find(k.surfaces.begin(), k.surfaces.end(), "$L^p$ spaces") != k.surfaces.end()) lp = &k;
  }
  REQUIRE(lp != nullptr);
  CHECK(lp->frequency == 2);
  CHECK(lp->contains_formula);
  REQUIRE(lp->spans.size() == 2);
  for (const auto& s : lp->spans) CHECK(text.substr(s.begin, s.end - s.begin) == "$L^p$ spaces");

  const std::string golden_path = mt::testing::SourcePath("tests/data/abstract_lp.golden.json");
  const std::string got = mt::SerializeResult(r, Tags()) + "\n";
  if (std::getenv("MATHTEXT_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(golden_path, std::ios::binary) << got;
  }
  CHECK(got == ReadFile(golden_path));
}

TEST_CASE("analysis is deterministic and spans point into the input") {
  const auto& p = mt::testing::FixturePipeline();
  auto docs = mt::testing::FixtureAbstracts();
  docs.push_back({"5k", ReadFile(mt::testing::SourcePath("tests/data/abstract_5k.txt")), {}});
  for (const auto& d : docs) {
    auto r = p.Analyze(d.text, d.doc_id);
    CHECK(mt::SerializeResult(r, Tags()) == mt::SerializeResult(p.Analyze(d.text, d.doc_id), Tags()));
    CHECK(r.original_text == d.text);
    for (const auto& k : r.keyphrases) {
      CHECK(k.spans.size() == k.frequency);
      for (const auto& s : k.spans) {
        REQUIRE(s.end <= d.text.size());
        const std::string slice = d.text.substr(s.begin, s.end - s.begin);
        CHECK(std::find(k.surfaces.begin(), k.surfaces.end(), slice) != k.surfaces.end());
      }
    }
    for (const auto& e : r.entities) CHECK(e.span.end <= d.text.size());
    for (const auto& prop : r.proposals) {
      CHECK(prop.ranked.size() == (prop.method == mt::ClassifierMethod::kNaiveBayes
                                       ? p.resources().naive_bayes->classes.size()
                                       : p.resources().svm->classes.size()));
    }
  }
}

TEST_CASE("default doc id is a content hash") {
  const auto& p = mt::testing::FixturePipeline();
  auto a = p.Analyze("Graphs and trees.");
  CHECK(a.doc_id == mt::DefaultDocId("Graphs and trees."));
  CHECK(a.doc_id.size() == 4 + 16);
  CHECK(a.doc_id != mt::DefaultDocId("Graphs and trees!"));
}

TEST_CASE("missing classifier") {
  mt::Pipeline p(WithoutClassifiers());
  try {
    p.Analyze("Some text.");
    FAIL("analysis without classifiers succeeded");
  } catch (const mt::Error& e) {
    CHECK(e.code() == mt::ErrorCode::kModelNotLoaded);
  }
  mt::FeedbackLog log(mt::testing::TempDir("nomodel") + "/fb.jsonl");
  mt::ApiHandlers api(p, log);
  auto reply = api.Analyze(R"({"text":"Some text."})");
  CHECK(reply.status == 503);
  CHECK(json::parse(reply.body)["code"] == "ModelNotLoaded");
  CHECK(json::parse(api.Health().body)["status"] == "degraded");

  auto res = WithoutClassifiers();
  res.methods = {};
  mt::Pipeline tokens_only(std::move(res));
  CHECK(tokens_only.Analyze("Some text.").proposals.empty());
}

TEST_CASE("unbalanced delimiter reaches the client") {
  const auto& p = mt::testing::FixturePipeline();
  try {
    p.Analyze("Let $x be given.");
    FAIL("unbalanced input accepted");
  } catch (const mt::Error& e) {
    CHECK(e.code() == mt::ErrorCode::kUnbalancedDelimiter);
    CHECK(e.byte_offset() == 4u);
  }
  mt::FeedbackLog log(mt::testing::TempDir("unbal") + "/fb.jsonl");
  mt::ApiHandlers api(p, log);
  auto reply = api.Analyze(R"({"text":"Let $x be given."})");
  CHECK(reply.status == 422);
  auto body = json::parse(reply.body);
  CHECK(body["code"] == "UnbalancedDelimiter");
  CHECK(body["offset"] == 4);

  CHECK(api.Analyze("not json").status == 400);
  CHECK(api.Analyze(R"({"text": 3})").status == 422);
  CHECK(api.Analyze(R"({"text": "x", "doc_id": 3})").status == 422);
}

TEST_CASE("feedback records") {
  const std::string path = mt::testing::TempDir("feedback") + "/fb.jsonl";
  mt::FeedbackLog log(path);
  auto rec = mt::ParseFeedback(json::parse(R"({"doc_id":"d1","item_kind":"class",
      "item_value":"46","verdict":"accept","editor_id":"ed"})"), 1700000000);
  CHECK(rec.item_kind == mt::ItemKind::kClass);
  CHECK(rec.verdict == mt::Verdict::kAccept);
  CHECK(rec.timestamp == 1700000000);
  log.Append(rec);
  auto all = mt::FeedbackLog::ReadAll(path);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == rec);

  for (const char* bad : {R"({"doc_id":"d","item_kind":"term","item_value":"x","verdict":"accept","editor_id":"e"})",
                          R"({"doc_id":"d","item_kind":"class","item_value":"x","verdict":"maybe","editor_id":"e"})",
                          R"({"doc_id":"","item_kind":"class","item_value":"x","verdict":"accept","editor_id":"e"})",
                          R"({"item_kind":"class","item_value":"x","verdict":"accept","editor_id":"e"})"}) {
    try {
      mt::ParseFeedback(json::parse(bad), 0);
      FAIL("invalid feedback accepted: " << bad);
    } catch (const mt::Error& e) {
      CHECK(e.code() == mt::ErrorCode::kValidation);
    }
  }

  // A torn final line is not a record.
  { std::ofstream(path, std::ios::app) << R"({"timestamp":1,"doc_id":"d)"; }
  CHECK(mt::FeedbackLog::ReadAll(path).size() == 1);
}

TEST_CASE("concurrent feedback writers lose nothing") {
  const std::string path = mt::testing::TempDir("concurrent") + "/fb.jsonl";
  mt::FeedbackLog log(path);
  constexpr int kThreads = 8;
  constexpr int kEach = 50;
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&log, t] {
      for (int i = 0; i < kEach; ++i) {
        mt::FeedbackRecord r;
        r.timestamp = i;
        r.doc_id = "doc" + std::to_string(t);
        r.item_value = "v" + std::to_string(i);
        r.editor_id = "e";
        log.Append(r);
      }
    });
  }
  for (auto& th : threads) th.join();
  auto all = mt::FeedbackLog::ReadAll(path);
  CHECK(all.size() == kThreads * kEach);
  std::set<std::string> seen;
  for (const auto& r : all) seen.insert(r.doc_id + "/" + r.item_value);
  CHECK(seen.size() == kThreads * kEach);
}

TEST_CASE("unwritable feedback log") {
  const std::string dir = mt::testing::TempDir("unwritable");
  mt::FeedbackLog log(dir);  // a directory, not a file
  mt::FeedbackRecord r{1, "d", mt::ItemKind::kKeyphrase, "x", mt::Verdict::kReject, "e"};
  try {
    log.Append(r);
    FAIL("append to a directory succeeded");
  } catch (const mt::Error& e) {
    CHECK(e.code() == mt::ErrorCode::kStorageFailure);
  }
  mt::ApiHandlers api(mt::testing::FixturePipeline(), log);
  auto reply = api.Feedback(R"({"doc_id":"d","item_kind":"keyphrase","item_value":"x",
      "verdict":"reject","editor_id":"e"})");
  CHECK(reply.status == 500);
  CHECK(json::parse(reply.body)["code"] == "StorageFailure");
}

TEST_CASE("models directory round trip") {
  const std::string models = mt::testing::TempDir("models");
  mt::testing::WriteFixtureModels(models);
  auto loaded = mt::Pipeline::Load({models, mt::testing::SourcePath("data/lexicons"),
                                    {mt::ClassifierMethod::kNaiveBayes, mt::ClassifierMethod::kLinearSvm}});
  const auto& fixture = mt::testing::FixturePipeline();
  for (const auto& d : mt::testing::FixtureAbstracts()) {
    CHECK(mt::SerializeResult(loaded.Analyze(d.text, d.doc_id), Tags()) ==
          mt::SerializeResult(fixture.Analyze(d.text, d.doc_id), Tags()));
  }
  try {
    mt::Pipeline::Load({mt::testing::TempDir("empty_models"), "", {}});
    FAIL("missing tagger accepted");
  } catch (const mt::Error& e) {
    CHECK(e.code() != mt::ErrorCode::kValidation);
  }
}

TEST_CASE("http endpoints") {
  const auto& p = mt::testing::FixturePipeline();
  const std::string path = mt::testing::TempDir("http") + "/fb.jsonl";
  mt::FeedbackLog log(path);
  mt::HttpServer server(p, log);
  const int port = server.BindToAnyPort();
  REQUIRE(port > 0);
  std::thread t([&server] { server.ListenAfterBind(); });
  server.WaitUntilReady();

  httplib::Client cli("127.0.0.1", port);
  auto health = cli.Get("/v1/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(json::parse(health->body)["status"] == "ok");
  CHECK(json::parse(health->body)["pipeline_version"] == mt::PipelineVersion());

  auto scheme = cli.Get("/v1/scheme");
  REQUIRE(scheme);
  CHECK(json::parse(scheme->body)["classes"].size() == p.scheme().classes.size());

  const std::string text = ReadFile(mt::testing::SourcePath("tests/data/abstract_lp.txt"));
  auto analyze = cli.Post("/v1/analyze", json{{"text", text}, {"doc_id", "lp"}}.dump(),
                          "application/json");
  REQUIRE(analyze);
  CHECK(analyze->status == 200);
  CHECK(analyze->body == mt::SerializeResult(p.Analyze(text, "lp"), Tags()));

  auto bad = cli.Post("/v1/analyze", R"({"text":"$x"})", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 422);

  auto fb = cli.Post("/v1/feedback", R"({"doc_id":"lp","item_kind":"keyphrase",
      "item_value":"lp spaces","verdict":"accept","editor_id":"ed"})", "application/json");
  REQUIRE(fb);
  CHECK(fb->status == 200);
  auto stored = mt::FeedbackLog::ReadAll(path);
  REQUIRE(stored.size() == 1);
  CHECK(stored[0].item_value == "lp spaces");
  CHECK(stored[0].timestamp > 0);

  auto invalid = cli.Post("/v1/feedback", R"({"doc_id":"lp"})", "application/json");
  REQUIRE(invalid);
  CHECK(invalid->status == 422);

  server.Stop();
  t.join();
}
