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

#include "mathtext/evaluate.h"

#include <algorithm>

#include "mathtext/error.h"

namespace mathtext {

EvaluationMetrics Evaluate(const Predictor& predict,
                           std::span<const TrainingExample> test,
                           std::size_t k) {
  if (test.empty()) {
    throw Error(ErrorCode::kEmptyTestSet, "evaluation needs test documents");
  }
  if (k == 0) throw Error(ErrorCode::kValidation, "k must be positive");
  EvaluationMetrics m;
  m.documents = test.size();
  m.k = k;
  double top1 = 0.0, precision = 0.0, recall = 0.0;
  for (const auto& ex : test) {
    ClassProposal p = predict(ex.features);
    auto has = [&](const std::string& code) {
      return std::find(ex.labels.begin(), ex.labels.end(), code) !=
             ex.labels.end();
    };
    for (const auto& label : ex.labels) ++m.per_class[label].support;
    if (p.ranked.empty()) continue;
    const std::string& best = p.ranked.front().code;
    auto& counts = m.per_class[best];
    ++counts.predicted;
    if (has(best)) {
      ++counts.correct;
      top1 += 1;
    }
    const std::size_t cutoff = std::min(k, p.ranked.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < cutoff; ++i) hits += has(p.ranked[i].code);
    precision += static_cast<double>(hits) / static_cast<double>(cutoff);
    if (!ex.labels.empty()) {
      recall += static_cast<double>(hits) /
                static_cast<double>(ex.labels.size());
    }
  }
  const double n = static_cast<double>(test.size());
  m.top1_accuracy = top1 / n;
  m.precision_at_k = precision / n;
  m.recall_at_k = recall / n;
  return m;
}

EvaluationMetrics Evaluate(const NaiveBayesModel& model,
                           std::span<const TrainingExample> test,
                           std::size_t k) {
  return Evaluate(
      [&](const FeatureVector& x) { return PredictNaiveBayes(model, x); }, test,
      k);
}

EvaluationMetrics Evaluate(const LinearSvmModel& model,
                           std::span<const TrainingExample> test,
                           std::size_t k) {
  return Evaluate(
      [&](const FeatureVector& x) { return PredictLinearSvm(model, x); }, test,
      k);
}

}  // namespace mathtext
