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

#ifndef MATHTEXT_PIPELINE_H_
#define MATHTEXT_PIPELINE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mathtext/features.h"
#include "mathtext/hmm_tagger.h"
#include "mathtext/ingest.h"
#include "mathtext/lexlayer.h"
#include "mathtext/linear_svm.h"
#include "mathtext/naive_bayes.h"
#include "mathtext/phrases.h"

namespace mathtext {

// File names inside a models directory.
inline constexpr std::string_view kTaggerFile = "tagger.hmm";
inline constexpr std::string_view kNaiveBayesFile = "nb.model";
inline constexpr std::string_view kSvmFile = "svm.model";

// File names inside a lexicons directory. All are optional; without a
// scheme file the service reports an empty class list.
inline constexpr std::string_view kSchemeFile = "msc.tsv";
inline constexpr std::string_view kAcronymFile = "acronyms.tsv";
inline constexpr std::string_view kPersonNameFile = "person_names.tsv";
inline constexpr std::string_view kNamedEntityFile = "named_entities.tsv";
inline constexpr std::string_view kStoplistFile = "phrase_stoplist.tsv";
inline constexpr std::string_view kPatternsFile = "patterns.txt";

std::string PipelineVersion();

struct PipelineConfig {
  std::string models_dir;
  std::string lexicons_dir;
  std::vector<ClassifierMethod> methods = {ClassifierMethod::kNaiveBayes,
                                           ClassifierMethod::kLinearSvm};
};

struct Lexicons {
  Lexicon acronyms{LexiconKind::kAcronym, {}};
  Lexicon person_names{LexiconKind::kPersonName, {}};
  Lexicon named_entities{LexiconKind::kNamedEntity, {}};
  Lexicon stoplist{LexiconKind::kPhraseStoplist, {}};
};

// Reads every lexicon present in `dir`; absent files give empty lexicons.
Lexicons LoadLexicons(const std::string& dir);

struct PipelineResources {
  HmmModel tagger;
  Lexicons lexicons;
  std::vector<TagPattern> patterns;
  MscScheme scheme;
  std::optional<NaiveBayesModel> naive_bayes;
  std::optional<LinearSvmModel> svm;
  std::vector<ClassifierMethod> methods;
};

struct AnalysisResult {
  std::string doc_id;
  std::string original_text;
  std::vector<KeyPhraseCandidate> keyphrases;
  std::vector<ClassProposal> proposals;
  UnknownTokenReport unknown_tokens;
  // Spans are in original-text coordinates.
  std::vector<EntityMatch> entities;
  std::string pipeline_version;
};

// "doc-" followed by the FNV-1a hash of the text in hex.
std::string DefaultDocId(std::string_view text);

// Immutable after construction; safe to share between threads.
class Pipeline {
 public:
  explicit Pipeline(PipelineResources resources);

  // Classifier files are optional; a missing one only fails when an
  // enabled method is asked to predict.
  static Pipeline Load(const PipelineConfig& config);

  const PipelineResources& resources() const { return res_; }
  const MscScheme& scheme() const { return res_.scheme; }

  // Everything up to and including key-phrase filtering.
  struct Prepared {
    MaskedText masked;
    std::vector<TaggedSentence> tagged;
    AnalyzedDocument document;
    std::vector<EntityMatch> entities;  // masked coordinates
  };
  Prepared Prepare(std::string_view text) const;

  AnalysisResult Analyze(std::string_view text,
                         std::string doc_id = "") const;

 private:
  PipelineResources res_;
};

// Token-only analysis used to featurize with the `tokens` source; it needs
// no models.
AnalyzedDocument TokenizeOnly(std::string_view text);

// Featurizes labeled documents. `pipeline` is required for the keyphrases
// source. With `frozen`, unseen features map to `__UNK__`.
std::vector<TrainingExample> BuildExamples(
    const std::vector<LabeledDocument>& docs, FeatureSource source,
    FeatureIndex& index, bool frozen, const Pipeline* pipeline);

void SaveModels(const std::string& dir, const HmmModel& tagger,
                const NaiveBayesModel* naive_bayes, const LinearSvmModel* svm);

}  // namespace mathtext

#endif  // MATHTEXT_PIPELINE_H_
