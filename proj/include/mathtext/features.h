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

#ifndef MATHTEXT_FEATURES_H_
#define MATHTEXT_FEATURES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mathtext/phrases.h"
#include "mathtext/textprep.h"

namespace mathtext {

using FeatureId = std::uint32_t;

enum class FeatureSource { kTokens, kKeyphrases };

std::string_view FeatureSourceName(FeatureSource source);
std::optional<FeatureSource> ParseFeatureSource(std::string_view name);

// Bidirectional feature-name map shared by training and prediction. Id 0 is
// always the unknown-feature bucket `__UNK__`.
class FeatureIndex {
 public:
  static constexpr std::string_view kUnknown = "__UNK__";
  static constexpr std::string_view kFormula = "__FORMULA__";
  static constexpr FeatureId kUnknownId = 0;

  FeatureIndex();

  std::optional<FeatureId> Find(std::string_view name) const;
  FeatureId Intern(std::string_view name);
  const std::string& name(FeatureId id) const { return names_[id]; }
  const std::vector<std::string>& names() const { return names_; }

  // Number of ids including `__UNK__`.
  std::size_t size() const { return names_.size(); }
  // Number of real features (excluding `__UNK__`).
  std::size_t vocabulary_size() const { return names_.size() - 1; }

  bool operator==(const FeatureIndex& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, FeatureId> ids_;
};

struct FeatureVector {
  // Strictly positive values only.
  std::map<FeatureId, double> counts;
  FeatureSource source = FeatureSource::kTokens;

  void Add(FeatureId id, double count) {
    if (count > 0) counts[id] += count;
  }
  bool empty() const { return counts.empty(); }
};

// What featurization needs from an analyzed document.
struct AnalyzedDocument {
  std::vector<std::vector<Token>> sentences;
  std::vector<KeyPhraseCandidate> keyphrases;
};

// Tokens mode counts case-folded word tokens, with every formula mapped to
// `__FORMULA__`; keyphrases mode counts normalized key phrases by frequency.
// Unseen names are interned unless `frozen`, in which case they count under
// `__UNK__` (and `index` is left untouched).
FeatureVector Featurize(const AnalyzedDocument& doc, FeatureSource source,
                        FeatureIndex& index, bool frozen);
FeatureVector FeaturizeFrozen(const AnalyzedDocument& doc,
                              FeatureSource source, const FeatureIndex& index);

enum class ClassifierMethod { kNaiveBayes, kLinearSvm };

// "nb" / "sv", the labels shown next to each proposal list.
std::string_view MethodLabel(ClassifierMethod method);

struct ScoredClass {
  std::string code;
  double score = 0.0;

  bool operator==(const ScoredClass&) const = default;
};

struct ClassProposal {
  ClassifierMethod method = ClassifierMethod::kNaiveBayes;
  // Descending score; equal scores in ascending code order.
  std::vector<ScoredClass> ranked;
};

void SortRanking(std::vector<ScoredClass>& ranked);

struct TrainingExample {
  FeatureVector features;
  std::vector<std::string> labels;
};

}  // namespace mathtext

#endif  // MATHTEXT_FEATURES_H_
