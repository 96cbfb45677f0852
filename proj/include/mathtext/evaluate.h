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

#ifndef MATHTEXT_EVALUATE_H_
#define MATHTEXT_EVALUATE_H_

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>

#include "mathtext/features.h"
#include "mathtext/linear_svm.h"
#include "mathtext/naive_bayes.h"

namespace mathtext {

struct ClassCounts {
  std::size_t support = 0;    // test documents carrying the label
  std::size_t predicted = 0;  // documents ranked first for the class
  std::size_t correct = 0;    // of those, documents carrying the label
};

struct EvaluationMetrics {
  std::size_t documents = 0;
  std::size_t k = 0;
  double top1_accuracy = 0.0;
  double precision_at_k = 0.0;
  double recall_at_k = 0.0;
  std::map<std::string, ClassCounts> per_class;
};

using Predictor = std::function<ClassProposal(const FeatureVector&)>;

// A document is top-1 correct when its best-ranked class is among its labels.
// precision@k divides hits by min(k, number of ranked classes).
// Throws Error(kEmptyTestSet).
EvaluationMetrics Evaluate(const Predictor& predict,
                           std::span<const TrainingExample> test,
                           std::size_t k);
EvaluationMetrics Evaluate(const NaiveBayesModel& model,
                           std::span<const TrainingExample> test,
                           std::size_t k);
EvaluationMetrics Evaluate(const LinearSvmModel& model,
                           std::span<const TrainingExample> test,
                           std::size_t k);

}  // namespace mathtext

#endif  // MATHTEXT_EVALUATE_H_
