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

#include "support/fixtures.h"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <mutex>
#include <utility>

#include "mathtext/text_util.h"

namespace mathtext::testing {

namespace fs = std::filesystem;

std::string SourcePath(const std::string& relative) {
  return std::string(MATHTEXT_SOURCE_DIR) + "/" + relative;
}

std::string TempDir(const std::string& tag) {
  static std::mutex mu;
  static int counter = 0;
  std::lock_guard<std::mutex> lock(mu);
  fs::path p = fs::temp_directory_path() /
               ("mathtext-" + tag + "-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

TaggedCorpus WsjSample() {
  return ReadTaggedCorpus(SourcePath("tests/data/wsj_sample.tsv"),
                          TagSet::PennTreebank());
}

TaggedCorpus FixtureTaggerCorpus() {
  TaggedCorpus c = WsjSample();
  TaggedCorpus math = ReadTaggedCorpus(
      SourcePath("data/tagged/math_supplement.tsv"), TagSet::PennTreebank());
  for (auto& s : math.sentences) c.sentences.push_back(std::move(s));
  return c;
}

std::vector<LabeledDocument> FixtureAbstracts() {
  const std::string contents = ReadFile(SourcePath("data/corpus/abstracts.tsv"));
  return ParseLabeledCorpus(contents, SchemeFromLabels(contents));
}

namespace {

PipelineResources BuildResources() {
  PipelineResources res;
  res.tagger = TrainHmm(FixtureTaggerCorpus(), TagSet::PennTreebank());
  res.lexicons = LoadLexicons(SourcePath("data/lexicons"));
  res.scheme = ReadMscScheme(SourcePath("data/lexicons/msc.tsv"));
  res.patterns = DefaultPatterns(res.tagger.tagset());
  res.methods = {ClassifierMethod::kNaiveBayes, ClassifierMethod::kLinearSvm};

  const auto docs = FixtureAbstracts();
  FeatureIndex index;
  auto examples = BuildExamples(docs, FeatureSource::kTokens, index, false, nullptr);
  res.naive_bayes = TrainNaiveBayes(examples, index);
  res.svm = TrainLinearSvm(examples, index);
  return res;
}

}  // namespace

const Pipeline& FixturePipeline() {
  static const Pipeline pipeline(BuildResources());
  return pipeline;
}

void WriteFixtureModels(const std::string& dir) {
  const auto& res = FixturePipeline().resources();
  SaveModels(dir, res.tagger, &*res.naive_bayes, &*res.svm);
}

std::string RandomTexString(std::mt19937_64& rng) {
  static const std::vector<std::string> kWords = {
      "Let", "space", "Banach", "operators", "für", "naïve", "Erdős",
      "MATHF3", "QMATHF12", "e.g.", "well-posed", "3.14", "is", "of",
      "the", "(see", "[1])", "\\emph{bounded}", "\\$5", "costs", "50%",
      "\\\\", "--", "x", "\n", "\t", "  ", ",", ".", "?", "`quoted'"};
  static const std::vector<std::string> kInner = {
      "x", "\\alpha", "^2", "_{n}", "+", "L^p", "\\infty", "\\frac{1}{2}",
      " ", "\\|f\\|", "(a,b)", "[0,1]", "\\{0\\}", "=", "<", "\\leq", "é",
      "\\mathbb{R}", "\\sum_{k=1}^n", "MATHF0"};
  auto pick = [&rng](const std::vector<std::string>& v) -> const std::string& {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  auto inner = [&]() {
    std::string s;
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int i = 0; i < n; ++i) s += pick(kInner);
    return s;
  };
  std::string out;
  const int pieces = std::uniform_int_distribution<int>(1, 25)(rng);
  for (int i = 0; i < pieces; ++i) {
    if (!out.empty() && std::uniform_int_distribution<int>(0, 2)(rng) > 0) {
      out += ' ';
    }
    switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
      case 0:
        out += "$" + inner() + "$";
        break;
      case 1:
        out += "$$" + inner() + "$$";
        break;
      case 2:
        out += "\\(" + inner() + "\\)";
        break;
      case 3:
        out += "\\[" + inner() + "\\]";
        break;
      case 4:
        out += "$\\$" + inner() + "$";  // escaped dollar inside math
        break;
      default:
        out += pick(kWords);
    }
  }
  return out;
}

ClassifierCorpus SeparableCorpus() {
  ClassifierCorpus s;
  const FeatureId a = s.index.Intern("a");
  const FeatureId b = s.index.Intern("b");
  for (int i = 0; i < 20; ++i) {
    TrainingExample ea, eb;
    ea.features.Add(a, 1 + i % 3);
    ea.labels = {"A"};
    eb.features.Add(b, 1 + i % 4);
    eb.labels = {"B"};
    s.corpus.push_back(ea);
    s.corpus.push_back(eb);
  }
  return s;
}

ClassifierCorpus RandomNbCorpus(std::mt19937_64& rng) {
  ClassifierCorpus r;
  const int classes = std::uniform_int_distribution<int>(1, 5)(rng);
  const int features = std::uniform_int_distribution<int>(1, 10)(rng);
  for (int f = 0; f < features; ++f) r.index.Intern("f" + std::to_string(f));
  const int docs = std::uniform_int_distribution<int>(1, 20)(rng);
  for (int d = 0; d < docs; ++d) {
    TrainingExample ex;
    const int nf = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int k = 0; k < nf; ++k) {
      ex.features.Add(std::uniform_int_distribution<FeatureId>(1, features)(rng),
                      std::uniform_int_distribution<int>(1, 3)(rng));
    }
    const int nl = std::uniform_int_distribution<int>(1, std::min(2, classes))(rng);
    for (int l = 0; l < nl; ++l) {
      std::string code = "0" + std::to_string(std::uniform_int_distribution<int>(0, classes - 1)(rng));
      if (std::find(ex.labels.begin(), ex.labels.end(), code) == ex.labels.end()) {
        ex.labels.push_back(code);
      }
    }
    std::sort(ex.labels.begin(), ex.labels.end());
    r.corpus.push_back(ex);
  }
  return r;
}

}  // namespace mathtext::testing
