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

#include "mathtext/features.h"

#include <algorithm>

#include "mathtext/text_util.h"

namespace mathtext {

std::string_view FeatureSourceName(FeatureSource source) {
  return source == FeatureSource::kTokens ? "tokens" : "keyphrases";
}

std::optional<FeatureSource> ParseFeatureSource(std::string_view name) {
  if (name == "tokens") return FeatureSource::kTokens;
  if (name == "keyphrases") return FeatureSource::kKeyphrases;
  return std::nullopt;
}

FeatureIndex::FeatureIndex() { Intern(kUnknown); }

std::optional<FeatureId> FeatureIndex::Find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

FeatureId FeatureIndex::Intern(std::string_view name) {
  auto [it, inserted] =
      ids_.emplace(std::string(name), static_cast<FeatureId>(names_.size()));
  if (inserted) names_.emplace_back(name);
  return it->second;
}

namespace {

template <typename Resolve>
FeatureVector FeaturizeWith(const AnalyzedDocument& doc, FeatureSource source,
                            Resolve resolve) {
  FeatureVector v;
  v.source = source;
  if (source == FeatureSource::kTokens) {
    for (const auto& sentence : doc.sentences) {
      for (const auto& tok : sentence) {
        if (tok.kind == TokenKind::kFormula) {
          v.Add(resolve(FeatureIndex::kFormula), 1);
        } else if (tok.kind == TokenKind::kWord) {
          v.Add(resolve(CaseFold(tok.surface)), 1);
        }
      }
    }
  } else {
    for (const auto& kp : doc.keyphrases) {
      v.Add(resolve(kp.normalized), static_cast<double>(kp.frequency));
    }
  }
  return v;
}

}  // namespace

FeatureVector Featurize(const AnalyzedDocument& doc, FeatureSource source,
                        FeatureIndex& index, bool frozen) {
  if (frozen) return FeaturizeFrozen(doc, source, index);
  return FeaturizeWith(doc, source,
                       [&](std::string_view name) { return index.Intern(name); });
}

FeatureVector FeaturizeFrozen(const AnalyzedDocument& doc,
                              FeatureSource source, const FeatureIndex& index) {
  return FeaturizeWith(doc, source, [&](std::string_view name) {
    return index.Find(name).value_or(FeatureIndex::kUnknownId);
  });
}

std::string_view MethodLabel(ClassifierMethod method) {
  return method == ClassifierMethod::kNaiveBayes ? "nb" : "sv";
}

void SortRanking(std::vector<ScoredClass>& ranked) {
  std::sort(ranked.begin(), ranked.end(),
            [](const ScoredClass& a, const ScoredClass& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.code < b.code;
            });
}

}  // namespace mathtext
