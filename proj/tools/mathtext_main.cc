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

// Command-line front end: training, evaluation, batch analysis, serving.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mathtext/error.h"
#include "mathtext/evaluate.h"
#include "mathtext/http_service.h"
#include "mathtext/pipeline.h"
#include "mathtext/result_json.h"
#include "mathtext/text_util.h"

namespace mt = mathtext;

namespace {

std::vector<mt::ClassifierMethod> ParseMethods(const std::vector<std::string>& names) {
  std::vector<mt::ClassifierMethod> out;
  for (const auto& n : names) {
    if (n == "nb") {
      out.push_back(mt::ClassifierMethod::kNaiveBayes);
    } else if (n == "sv" || n == "svm") {
      out.push_back(mt::ClassifierMethod::kLinearSvm);
    } else {
      throw mt::Error(mt::ErrorCode::kValidation, "unknown method: " + n);
    }
  }
  return out;
}

// Labels are checked against --scheme, else the lexicons' scheme file,
// else only for well-formedness.
std::vector<mt::LabeledDocument> ReadLabeled(const std::string& path,
                                             const std::string& scheme,
                                             const std::string& lexicons) {
  const std::string contents = mt::ReadFile(path);
  if (!scheme.empty()) {
    return mt::ParseLabeledCorpus(contents, mt::ReadMscScheme(scheme));
  }
  if (!lexicons.empty()) {
    const std::string file = lexicons + "/" + std::string(mt::kSchemeFile);
    if (std::filesystem::exists(file)) {
      return mt::ParseLabeledCorpus(contents, mt::ReadMscScheme(file));
    }
  }
  return mt::ParseLabeledCorpus(contents, mt::SchemeFromLabels(contents));
}

mt::MscScheme SchemeOf(const std::vector<std::string>& classes) {
  mt::MscScheme s;
  for (const auto& c : classes) s.classes.push_back({c, ""});
  return s;
}

// A pipeline without classifiers, for keyphrase featurization.
std::optional<mt::Pipeline> FeaturePipeline(mt::FeatureSource source,
                                            const std::string& models,
                                            const std::string& lexicons) {
  if (source != mt::FeatureSource::kKeyphrases) return std::nullopt;
  if (models.empty() || lexicons.empty()) {
    throw mt::Error(mt::ErrorCode::kValidation,
                    "keyphrase features need --models and --lexicons");
  }
  return mt::Pipeline::Load({models, lexicons, {}});
}

std::string ReadInput(const std::string& in) {
  if (in != "-") return mt::ReadFile(in);
  return std::string(std::istreambuf_iterator<char>(std::cin),
                     std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Key-phrase extraction and MSC classification for mathematical texts"};
  app.set_version_flag("--version", std::string(MATHTEXT_VERSION));
  app.require_subcommand(1);

  // train-tagger
  std::string corpus, out;
  std::vector<std::string> tagged_corpora;
  mt::Smoothing smoothing;
  auto* tt = app.add_subcommand("train-tagger", "Train the HMM tagger");
  tt->add_option("--corpus", tagged_corpora,
                 "word<TAB>tag file; repeat to combine corpora")
      ->required();
  tt->add_option("--out", out, "output model file")->required();
  tt->add_option("--k-trans", smoothing.k_trans, "transition smoothing")
      ->capture_default_str();
  tt->add_option("--k-emit", smoothing.k_emit, "emission smoothing")
      ->capture_default_str();

  // train-classifier
  std::string method = "nb", source_name = "tokens", scheme, models, lexicons;
  double alpha = 1.0;
  mt::SvmHyperparameters hyper;
  auto* tc = app.add_subcommand("train-classifier", "Train an MSC classifier");
  tc->add_option("--method", method, "nb or svm")
      ->check(CLI::IsMember({"nb", "svm"}))
      ->required();
  tc->add_option("--corpus", corpus, "doc_id<TAB>codes<TAB>text file")->required();
  tc->add_option("--source", source_name, "tokens or keyphrases")
      ->check(CLI::IsMember({"tokens", "keyphrases"}))
      ->capture_default_str();
  tc->add_option("--out", out, "output model file")->required();
  auto* alpha_opt =
      tc->add_option("--alpha", alpha, "NB smoothing")->capture_default_str();
  auto* lambda_opt = tc->add_option("--lambda", hyper.lambda, "SVM regularization")
                         ->capture_default_str();
  auto* epochs_opt =
      tc->add_option("--epochs", hyper.epochs, "SVM epochs")->capture_default_str();
  auto* seed_opt =
      tc->add_option("--seed", hyper.seed, "SVM shuffle seed")->capture_default_str();
  alpha_opt->excludes(lambda_opt)->excludes(epochs_opt)->excludes(seed_opt);
  tc->add_option("--scheme", scheme, "MSC scheme file");
  tc->add_option("--models", models, "models dir (keyphrase source)");
  tc->add_option("--lexicons", lexicons, "lexicons dir");

  // analyze
  std::string in = "-", format = "json", doc_id;
  std::vector<std::string> methods = {"nb", "sv"};
  auto* an = app.add_subcommand("analyze", "Analyze one document");
  an->add_option("--in", in, "input file or -")->capture_default_str();
  an->add_option("--models", models, "models dir")->required();
  an->add_option("--lexicons", lexicons, "lexicons dir")->required();
  an->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  an->add_option("--doc-id", doc_id, "document id");
  an->add_option("--methods", methods, "enabled classifiers")->delimiter(',');

  // evaluate
  std::string model, test;
  std::size_t k = 3;
  auto* ev = app.add_subcommand("evaluate", "Evaluate a classifier");
  ev->add_option("--method", method, "nb or svm")
      ->check(CLI::IsMember({"nb", "svm"}))
      ->required();
  ev->add_option("--model", model, "model file")->required();
  ev->add_option("--test", test, "labeled test corpus")->required();
  ev->add_option("--k", k, "cutoff for precision/recall")->capture_default_str();
  ev->add_option("--models", models, "models dir (keyphrase source)");
  ev->add_option("--lexicons", lexicons, "lexicons dir");

  // serve
  std::string host = "127.0.0.1", feedback_log;
  int port = 8080;
  auto* sv = app.add_subcommand("serve", "Run the HTTP API");
  sv->add_option("--models", models, "models dir")->required();
  sv->add_option("--lexicons", lexicons, "lexicons dir")->required();
  sv->add_option("--port", port, "port")->capture_default_str();
  sv->add_option("--host", host, "bind address")->capture_default_str();
  sv->add_option("--feedback-log", feedback_log, "feedback JSONL file")->required();
  sv->add_option("--methods", methods, "enabled classifiers")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tt) {
      const auto tagset = mt::TagSet::PennTreebank();
      mt::TaggedCorpus c;
      for (const auto& path : tagged_corpora) {
        auto part = mt::ReadTaggedCorpus(path, tagset);
        for (auto& s : part.sentences) c.sentences.push_back(std::move(s));
      }
      mt::SaveHmm(mt::TrainHmm(c, tagset, smoothing), out);
      std::fprintf(stderr, "trained on %zu tokens, %zu sentences\n",
                   c.token_count(), c.sentences.size());
    } else if (*tc) {
      const auto source = *mt::ParseFeatureSource(source_name);
      auto docs = ReadLabeled(corpus, scheme, lexicons);
      auto pipeline = FeaturePipeline(source, models, lexicons);
      mt::FeatureIndex index;
      auto examples = mt::BuildExamples(docs, source, index, false,
                                        pipeline ? &*pipeline : nullptr);
      if (method == "nb") {
        mt::SaveNaiveBayes(mt::TrainNaiveBayes(examples, index, alpha), out);
      } else {
        auto m = mt::TrainLinearSvm(examples, index, hyper);
        mt::SaveLinearSvm(m, out);
        if (!m.epoch_objective.empty()) {
          std::fprintf(stderr, "objective: epoch 1 %.6g, final %.6g\n",
                       m.epoch_objective.front(), m.epoch_objective.back());
        }
      }
      std::fprintf(stderr, "trained on %zu documents, %zu features\n",
                   docs.size(), index.vocabulary_size());
    } else if (*an) {
      auto pipeline =
          mt::Pipeline::Load({models, lexicons, ParseMethods(methods)});
      auto result = pipeline.Analyze(ReadInput(in), doc_id);
      const auto& tagset = pipeline.resources().tagger.tagset();
      if (format == "json") {
        std::cout << mt::SerializeResult(result, tagset) << "\n";
      } else {
        std::cout << mt::FormatResultText(result, tagset);
      }
    } else if (*ev) {
      mt::EvaluationMetrics metrics;
      // Test labels must be classes the model knows.
      auto run = [&](const auto& m) {
        auto docs = mt::ParseLabeledCorpus(mt::ReadFile(test), SchemeOf(m.classes));
        auto pipeline = FeaturePipeline(m.source, models, lexicons);
        mt::FeatureIndex index = m.index;
        auto examples = mt::BuildExamples(docs, m.source, index, true,
                                          pipeline ? &*pipeline : nullptr);
        return mt::Evaluate(m, examples, k);
      };
      metrics = method == "nb" ? run(mt::LoadNaiveBayes(model))
                               : run(mt::LoadLinearSvm(model));
      std::printf("documents\t%zu\n", metrics.documents);
      std::printf("top1_accuracy\t%.4f\n", metrics.top1_accuracy);
      std::printf("precision_at_%zu\t%.4f\n", k, metrics.precision_at_k);
      std::printf("recall_at_%zu\t%.4f\n", k, metrics.recall_at_k);
      std::printf("\nclass\tsupport\tpredicted\tcorrect\n");
      for (const auto& [code, c] : metrics.per_class) {
        std::printf("%s\t%zu\t%zu\t%zu\n", code.c_str(), c.support, c.predicted,
                    c.correct);
      }
    } else if (*sv) {
      auto pipeline =
          mt::Pipeline::Load({models, lexicons, ParseMethods(methods)});
      mt::FeedbackLog log(feedback_log);
      mt::HttpServer server(pipeline, log);
      if (!server.Bind(host, port)) {
        std::fprintf(stderr, "cannot bind %s:%d\n", host.c_str(), port);
        return 1;
      }
      std::fprintf(stderr, "listening on %s:%d\n", host.c_str(), port);
      server.ListenAfterBind();
    }
  } catch (const mt::Error& e) {
    std::fprintf(stderr, "error: %s: %s\n",
                 std::string(mt::ErrorCodeName(e.code())).c_str(), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
