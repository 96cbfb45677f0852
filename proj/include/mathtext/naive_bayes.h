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

#ifndef MATHTEXT_NAIVE_BAYES_H_
#define MATHTEXT_NAIVE_BAYES_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mathtext/features.h"

namespace mathtext {

// Multinomial Naive Bayes with Laplace (add-alpha) smoothing over the
// vocabulary plus the `__UNK__` bucket.
struct NaiveBayesModel {
  std::vector<std::string> classes;  // ascending codes
  std::vector<double> log_prior;
  // [class][feature id]; id 0 is `__UNK__`.
  std::vector<std::vector<double>> log_likelihood;
  double alpha = 1.0;
  FeatureIndex index;
  FeatureSource source = FeatureSource::kTokens;

  std::size_t vocabulary_size() const { return index.vocabulary_size(); }
  double LogLikelihood(std::size_t cls, FeatureId id) const;
};

// Multi-label documents contribute one instance per label. The feature index
// defines the vocabulary. Throws Error(kEmptyCorpus) or
// Error(kNonPositiveAlpha).
NaiveBayesModel TrainNaiveBayes(std::span<const TrainingExample> corpus,
                                const FeatureIndex& index, double alpha = 1.0);

// Posterior over all classes, normalized with log-sum-exp.
ClassProposal PredictNaiveBayes(const NaiveBayesModel& model,
                                const FeatureVector& x);

std::string SerializeNaiveBayes(const NaiveBayesModel& model);
NaiveBayesModel ParseNaiveBayes(std::string_view contents);
void SaveNaiveBayes(const NaiveBayesModel& model, const std::string& path);
NaiveBayesModel LoadNaiveBayes(const std::string& path);

}  // namespace mathtext

#endif  // MATHTEXT_NAIVE_BAYES_H_
