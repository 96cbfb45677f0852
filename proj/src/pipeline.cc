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

#include "mathtext/pipeline.h"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <utility>

#include "mathtext/error.h"
#include "mathtext/text_util.h"

namespace mathtext {

namespace fs = std::filesystem;

namespace {

std::string Join(const std::string& dir, std::string_view name) {
  return (fs::path(dir) / std::string(name)).string();
}

Lexicon ReadOptionalLexicon(const std::string& dir, std::string_view name,
                            LexiconKind kind) {
  const std::string path = Join(dir, name);
  if (!fs::exists(path)) return Lexicon(kind, {});
  return ReadLexicon(path, kind);
}

}  // namespace

std::string PipelineVersion() { return "mathtext-" MATHTEXT_VERSION; }

std::string DefaultDocId(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string("doc-") + buf;
}

Lexicons LoadLexicons(const std::string& dir) {
  Lexicons lex;
  lex.acronyms = ReadOptionalLexicon(dir, kAcronymFile, LexiconKind::kAcronym);
  lex.person_names =
      ReadOptionalLexicon(dir, kPersonNameFile, LexiconKind::kPersonName);
  lex.named_entities =
      ReadOptionalLexicon(dir, kNamedEntityFile, LexiconKind::kNamedEntity);
  lex.stoplist =
      ReadOptionalLexicon(dir, kStoplistFile, LexiconKind::kPhraseStoplist);
  return lex;
}

Pipeline::Pipeline(PipelineResources resources) : res_(std::move(resources)) {
  if (res_.patterns.empty()) res_.patterns = DefaultPatterns(res_.tagger.tagset());
}

Pipeline Pipeline::Load(const PipelineConfig& config) {
  PipelineResources res;
  res.tagger = LoadHmm(Join(config.models_dir, kTaggerFile));
  res.lexicons = LoadLexicons(config.lexicons_dir);
  const std::string scheme = Join(config.lexicons_dir, kSchemeFile);
  if (fs::exists(scheme)) res.scheme = ReadMscScheme(scheme);
  const std::string patterns = Join(config.lexicons_dir, kPatternsFile);
  if (fs::exists(patterns)) {
    res.patterns = ParsePatterns(ReadFile(patterns), res.tagger.tagset());
  }
  const std::string nb = Join(config.models_dir, kNaiveBayesFile);
  if (fs::exists(nb)) res.naive_bayes = LoadNaiveBayes(nb);
  const std::string svm = Join(config.models_dir, kSvmFile);
  if (fs::exists(svm)) res.svm = LoadLinearSvm(svm);
  res.methods = config.methods;
  return Pipeline(std::move(res));
}

Pipeline::Prepared Pipeline::Prepare(std::string_view text) const {
  Prepared p;
  p.masked = MaskFormulae(text);
  p.document.sentences = TokenizeDocument(p.masked);
  p.tagged = TagDocument(res_.tagger, p.document.sentences);

  std::vector<EntityMatch> ne, person, acro;
  std::vector<std::vector<TokenRange>> chunks;
  chunks.reserve(p.tagged.size());
  const Lexicons& lex = res_.lexicons;
  for (std::size_t s = 0; s < p.tagged.size(); ++s) {
    const TaggedSentence& sent = p.tagged[s];
    auto collect = [s](std::vector<EntityMatch> found,
                       std::vector<EntityMatch>& into) {
      for (auto& m : found) {
        m.sentence = s;
        into.push_back(std::move(m));
      }
    };
    collect(MatchGazetteer(sent, lex.named_entities), ne);
    collect(MatchGazetteer(sent, lex.person_names), person);
    collect(DetectAcronyms(sent, lex.acronyms), acro);
    chunks.push_back(
        ChunkNounPhrases(sent, res_.tagger.tagset(), res_.patterns));
  }
  p.entities =
      ResolveEntityOverlaps(std::move(ne), std::move(person), std::move(acro));
  p.document.keyphrases = FilterKeyphrases(
      AggregateKeyphrases(chunks, p.tagged, p.masked), lex.stoplist);
  return p;
}

AnalysisResult Pipeline::Analyze(std::string_view text,
                                 std::string doc_id) const {
  // Check models first so a missing one fails before any work is done.
  for (ClassifierMethod m : res_.methods) {
    const bool loaded = m == ClassifierMethod::kNaiveBayes
                            ? res_.naive_bayes.has_value()
                            : res_.svm.has_value();
    if (!loaded) {
      throw Error(ErrorCode::kModelNotLoaded,
                  "model not loaded: " + std::string(MethodLabel(m)));
    }
  }
  Prepared p = Prepare(text);

  AnalysisResult r;
  r.doc_id = doc_id.empty() ? DefaultDocId(text) : std::move(doc_id);
  r.original_text = std::string(text);
  r.pipeline_version = PipelineVersion();
  for (ClassifierMethod m : res_.methods) {
    if (m == ClassifierMethod::kNaiveBayes) {
      const auto& model = *res_.naive_bayes;
      r.proposals.push_back(PredictNaiveBayes(
          model, FeaturizeFrozen(p.document, model.source, model.index)));
    } else {
      const auto& model = *res_.svm;
      r.proposals.push_back(PredictLinearSvm(
          model, FeaturizeFrozen(p.document, model.source, model.index)));
    }
  }
  const Lexicon* lexicons[] = {&res_.lexicons.acronyms,
                               &res_.lexicons.person_names,
                               &res_.lexicons.named_entities};
  r.unknown_tokens = ReportUnknownTokens(p.tagged, res_.tagger, lexicons);
  for (auto& m : p.entities) m.span = p.masked.ToOriginal(m.span);
  r.entities = std::move(p.entities);
  r.keyphrases = std::move(p.document.keyphrases);
  return r;
}

AnalyzedDocument TokenizeOnly(std::string_view text) {
  AnalyzedDocument doc;
  doc.sentences = TokenizeDocument(MaskFormulae(text));
  return doc;
}

std::vector<TrainingExample> BuildExamples(
    const std::vector<LabeledDocument>& docs, FeatureSource source,
    FeatureIndex& index, bool frozen, const Pipeline* pipeline) {
  if (source == FeatureSource::kKeyphrases && pipeline == nullptr) {
    throw Error(ErrorCode::kModelNotLoaded,
                "keyphrase features need a tagger and lexicons");
  }
  std::vector<TrainingExample> out;
  out.reserve(docs.size());
  for (const auto& d : docs) {
    AnalyzedDocument doc = source == FeatureSource::kTokens
                               ? TokenizeOnly(d.text)
                               : pipeline->Prepare(d.text).document;
    out.push_back({Featurize(doc, source, index, frozen), d.labels});
  }
  return out;
}

void SaveModels(const std::string& dir, const HmmModel& tagger,
                const NaiveBayesModel* naive_bayes, const LinearSvmModel* svm) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir);
  SaveHmm(tagger, Join(dir, kTaggerFile));
  if (naive_bayes != nullptr) SaveNaiveBayes(*naive_bayes, Join(dir, kNaiveBayesFile));
  if (svm != nullptr) SaveLinearSvm(*svm, Join(dir, kSvmFile));
}

}  // namespace mathtext
