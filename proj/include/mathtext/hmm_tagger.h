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

#ifndef MATHTEXT_HMM_TAGGER_H_
#define MATHTEXT_HMM_TAGGER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mathtext/ingest.h"
#include "mathtext/tagset.h"
#include "mathtext/textprep.h"

namespace mathtext {

// Add-k constants for transitions and emissions.
struct Smoothing {
  double k_trans = 0.01;
  double k_emit = 0.1;
};

// First-order HMM over a TagSet. Emissions are indexed by the lower-cased
// surface; words outside the vocabulary are scored by a suffix model trained
// on rare words (suffixes of up to four code points combined with
// capitalization, digit and hyphen flags).
//
// A trained model is immutable and may be shared across threads.
class HmmModel {
 public:
  static constexpr std::size_t kMaxSuffix = 4;

  HmmModel() = default;

  // Builds a model directly from log-probability tables. `emissions` maps a
  // vocabulary surface to one value per tag; `unknown` holds log P(UNK | tag).
  // The suffix model is empty, so unknown words score log P(UNK | tag).
  static HmmModel FromTables(
      TagSet tagset, std::vector<double> start,
      std::vector<std::vector<double>> transitions,
      std::unordered_map<std::string, std::vector<double>> emissions,
      std::vector<double> unknown);

  const TagSet& tagset() const { return tagset_; }
  std::size_t num_tags() const { return tagset_.size(); }
  const Smoothing& smoothing() const { return smoothing_; }

  // Raw table entries.
  double start_logprob(TagId tag) const { return start_[tag]; }
  double transition_logprob(TagId prev, TagId tag) const {
    return trans_[prev * num_tags() + tag];
  }
  // log P(surface | tag) for a vocabulary surface (already lower-cased),
  // log P(UNK | tag) otherwise.
  double emission_logprob(TagId tag, std::string_view key) const;
  double unknown_logprob(TagId tag) const { return unknown_[tag]; }

  // Vocabulary membership of a raw surface (lower-cased before lookup).
  bool InVocabulary(std::string_view surface) const;
  std::size_t vocabulary_size() const { return emissions_.size(); }
  const std::unordered_map<std::string, std::vector<double>>& emissions()
      const {
    return emissions_;
  }

  // When the training corpus had no formula tokens, formula positions borrow
  // the transition statistics of this tag (NN by default).
  std::optional<TagId> formula_proxy() const { return formula_proxy_; }

  // Scores used by the decoder. They apply the formula proxy and the
  // constraint that formula tokens take the formula tag and nothing else does.
  double StartScore(TagId tag) const;
  double TransitionScore(TagId prev, TagId tag) const;
  double EmissionScore(TagId tag, const Token& token) const;
  std::vector<double> EmissionScores(const Token& token) const;

  // Suffix-model statistics: ML estimates of log P(tag | signature) for each
  // signature seen among rare training words.
  const std::unordered_map<std::string, std::vector<double>>& suffix_table()
      const {
    return suffix_;
  }
  // Signature of `surface` truncated to a suffix of `length` code points.
  static std::string Signature(std::string_view surface, std::size_t length);

  // Posterior over tags for an unknown surface from the longest signature
  // (length >= 1) seen in training; uniform when none is.
  std::vector<double> SuffixPosterior(std::string_view surface) const;

  std::string Serialize() const;
  static HmmModel Parse(std::string_view contents);

 private:
  friend HmmModel TrainHmm(const TaggedCorpus&, const TagSet&, Smoothing);

  TagId Effective(TagId tag) const;
  double UnknownWordScore(TagId tag, std::string_view surface) const;

  TagSet tagset_;
  Smoothing smoothing_;
  std::vector<double> start_;
  std::vector<double> trans_;  // row-major [prev][tag]
  std::unordered_map<std::string, std::vector<double>> emissions_;
  std::vector<double> emit_floor_;  // value of unseen (tag, word) pairs
  std::vector<double> unknown_;
  std::optional<TagId> formula_proxy_;

  std::unordered_map<std::string, std::vector<double>> suffix_;
  std::vector<double> rare_prior_;  // log P(tag) over rare words
  double suffix_theta_ = 0.0;
};

// Estimates an HmmModel with add-k smoothing. Throws Error(kEmptyCorpus).
HmmModel TrainHmm(const TaggedCorpus& corpus, const TagSet& tagset,
                  Smoothing smoothing = {});

struct ScoredTag {
  TagId tag = 0;
  // Viterbi log-score of the best path prefix ending here.
  double log_score = 0.0;

  bool operator==(const ScoredTag&) const = default;
};

// Most probable tag sequence. Ties go to the lowest tag index, resolved while
// backtracking from the last token.
std::vector<ScoredTag> ViterbiDecode(const HmmModel& model,
                                     std::span<const Token> tokens);

struct UnknownTagProposal {
  TagId tag = 0;
  double confidence = 0.0;
};

// Throws Error(kKnownToken) when `surface` is in the vocabulary.
UnknownTagProposal ProposeUnknownTag(const HmmModel& model,
                                     std::string_view surface);

struct TaggedToken {
  Token token;
  TagId tag = 0;
  double log_score = 0.0;
};

using TaggedSentence = std::vector<TaggedToken>;

std::vector<TaggedSentence> TagDocument(
    const HmmModel& model, const std::vector<std::vector<Token>>& sentences);

void SaveHmm(const HmmModel& model, const std::string& path);
HmmModel LoadHmm(const std::string& path);

}  // namespace mathtext

#endif  // MATHTEXT_HMM_TAGGER_H_
