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

#ifndef MATHTEXT_LINEAR_SVM_H_
#define MATHTEXT_LINEAR_SVM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mathtext/features.h"

namespace mathtext {

struct SvmHyperparameters {
  double lambda = 1e-4;
  std::size_t epochs = 20;
  std::uint64_t seed = 1;
};

// One-vs-rest linear SVM. Decision score for class c on x is
// dot(weights[c], x) + bias[c].
struct LinearSvmModel {
  std::vector<std::string> classes;  // ascending codes
  std::vector<std::vector<double>> weights;  // [class][feature id]
  std::vector<double> bias;
  SvmHyperparameters hyper;
  FeatureIndex index;
  FeatureSource source = FeatureSource::kTokens;

  // Regularized hinge objective of the averaged weights after each epoch,
  // summed over classes. Training diagnostics only; not persisted.
  std::vector<double> epoch_objective;

  double Margin(std::size_t cls, const FeatureVector& x) const;
};

// Per class, solves the binary hinge-loss problem (+1 for documents carrying
// the label, -1 otherwise) by stochastic sub-gradient descent with step
// 1/(lambda t) over a seeded shuffle each epoch. The returned weights are the
// average of the per-step iterates. The bias is learned as the weight of a
// constant feature and regularized with it.
// Throws Error(kSingleClassCorpus) unless at least two labels occur.
LinearSvmModel TrainLinearSvm(std::span<const TrainingExample> corpus,
                              const FeatureIndex& index,
                              SvmHyperparameters hyper = {});

// Raw margins for every class, descending.
ClassProposal PredictLinearSvm(const LinearSvmModel& model,
                               const FeatureVector& x);

// Regularized hinge objective of a binary problem:
// lambda/2 (|w|^2 + b^2) + mean(max(0, 1 - y (w.x + b))).
double SvmObjective(std::span<const double> weights, double bias,
                    double lambda, std::span<const TrainingExample> corpus,
                    std::string_view positive_label);

std::string SerializeLinearSvm(const LinearSvmModel& model);
LinearSvmModel ParseLinearSvm(std::string_view contents);
void SaveLinearSvm(const LinearSvmModel& model, const std::string& path);
LinearSvmModel LoadLinearSvm(const std::string& path);

}  // namespace mathtext

#endif  // MATHTEXT_LINEAR_SVM_H_
