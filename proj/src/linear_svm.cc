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

#include "mathtext/linear_svm.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "classifier_io.h"
#include "mathtext/error.h"
#include "mathtext/text_util.h"

namespace mathtext {

namespace {

bool HasLabel(const TrainingExample& ex, std::string_view label) {
  return std::find(ex.labels.begin(), ex.labels.end(), label) !=
         ex.labels.end();
}

// Fisher-Yates with raw engine output, so the permutation depends only on
// the seed and not on the standard library's distribution implementation.
void Shuffle(std::vector<std::size_t>& order, std::mt19937_64& rng) {
  for (std::size_t i = order.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
}

double Dot(std::span<const double> w, const FeatureVector& x) {
  double s = 0.0;
  for (const auto& [id, value] : x.counts) {
    s += (id < w.size() ? w[id] : w[FeatureIndex::kUnknownId]) * value;
  }
  return s;
}

// Pegasos for one binary problem. The iterate is kept as scale * v and the
// running sum of iterates as sum_a + sum_b * v, so each step costs O(nnz(x)).
// The last slot of the weight vector is the bias.
struct BinaryTrainer {
  std::size_t dims;  // features + bias
  double lambda;
  std::vector<double> v;
  double scale = 1.0;
  std::vector<double> sum_a;
  double sum_b = 0.0;
  std::size_t steps = 0;

  BinaryTrainer(std::size_t d, double l)
      : dims(d + 1), lambda(l), v(dims, 0.0), sum_a(dims, 0.0) {}

  double CurrentMargin(const FeatureVector& x) const {
    double s = v[dims - 1];
    for (const auto& [id, value] : x.counts) {
      FeatureId f = id < dims - 1 ? id : FeatureIndex::kUnknownId;
      s += v[f] * value;
    }
    return scale * s;
  }

  void Step(const FeatureVector& x, double y) {
    ++steps;
    const double eta = 1.0 / (lambda * static_cast<double>(steps));
    const bool violated = y * CurrentMargin(x) < 1.0;
    const double shrink = 1.0 - eta * lambda;
    if (shrink <= 0.0) {
      // The iterate collapses to zero; fold v into the running sum first.
      for (std::size_t i = 0; i < dims; ++i) {
        sum_a[i] += sum_b * v[i];
        v[i] = 0.0;
      }
      sum_b = 0.0;
      scale = 1.0;
    } else {
      scale *= shrink;
    }
    if (violated) {
      const double delta = eta * y / scale;
      for (const auto& [id, value] : x.counts) {
        FeatureId f = id < dims - 1 ? id : FeatureIndex::kUnknownId;
        sum_a[f] -= sum_b * delta * value;
        v[f] += delta * value;
      }
      sum_a[dims - 1] -= sum_b * delta;
      v[dims - 1] += delta;
    }
    sum_b += scale;
  }

  // Average of all iterates so far.
  std::vector<double> Average() const {
    std::vector<double> w(dims);
    const double t = static_cast<double>(std::max<std::size_t>(steps, 1));
    for (std::size_t i = 0; i < dims; ++i) w[i] = (sum_a[i] + sum_b * v[i]) / t;
    return w;
  }
};

}  // namespace

double LinearSvmModel::Margin(std::size_t cls, const FeatureVector& x) const {
  return Dot(weights[cls], x) + bias[cls];
}

double SvmObjective(std::span<const double> weights, double bias,
                    double lambda, std::span<const TrainingExample> corpus,
                    std::string_view positive_label) {
  double norm = bias * bias;
  for (double w : weights) norm += w * w;
  double loss = 0.0;
  for (const auto& ex : corpus) {
    double y = HasLabel(ex, positive_label) ? 1.0 : -1.0;
    loss += std::max(0.0, 1.0 - y * (Dot(weights, ex.features) + bias));
  }
  return 0.5 * lambda * norm +
         (corpus.empty() ? 0.0 : loss / static_cast<double>(corpus.size()));
}

LinearSvmModel TrainLinearSvm(std::span<const TrainingExample> corpus,
                              const FeatureIndex& index,
                              SvmHyperparameters hyper) {
  std::set<std::string> labels;
  for (const auto& ex : corpus) labels.insert(ex.labels.begin(), ex.labels.end());
  if (labels.size() < 2) {
    throw Error(ErrorCode::kSingleClassCorpus,
                "one-vs-rest training needs at least two distinct labels");
  }
  if (!(hyper.lambda > 0.0)) {
    throw Error(ErrorCode::kValidation, "lambda must be positive");
  }

  LinearSvmModel m;
  m.hyper = hyper;
  m.index = index;
  m.source = corpus.front().features.source;
  m.classes.assign(labels.begin(), labels.end());
  m.epoch_objective.assign(hyper.epochs, 0.0);
  const std::size_t dims = index.size();

  for (const auto& cls : m.classes) {
    BinaryTrainer trainer(dims, hyper.lambda);
    // Every class sees the same seeded sequence of shuffles.
    std::mt19937_64 rng(hyper.seed);
    std::vector<std::size_t> order(corpus.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> avg;
    for (std::size_t epoch = 0; epoch < hyper.epochs; ++epoch) {
      Shuffle(order, rng);
      for (std::size_t i : order) {
        trainer.Step(corpus[i].features, HasLabel(corpus[i], cls) ? 1.0 : -1.0);
      }
      avg = trainer.Average();
      m.epoch_objective[epoch] +=
          SvmObjective(std::span<const double>(avg.data(), dims), avg[dims],
                       hyper.lambda, corpus, cls);
    }
    if (avg.empty()) avg = trainer.Average();
    m.bias.push_back(avg[dims]);
    avg.resize(dims);
    m.weights.push_back(std::move(avg));
  }
  return m;
}

ClassProposal PredictLinearSvm(const LinearSvmModel& model,
                               const FeatureVector& x) {
  ClassProposal p;
  p.method = ClassifierMethod::kLinearSvm;
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    p.ranked.push_back({model.classes[c], model.Margin(c, x)});
  }
  SortRanking(p.ranked);
  return p;
}

std::string SerializeLinearSvm(const LinearSvmModel& m) {
  std::string out = "SVM v1\n";
  out += "SOURCE\t" + std::string(FeatureSourceName(m.source)) + "\n";
  out += "HYPER\t" + FormatDouble(m.hyper.lambda) + "\t" +
         std::to_string(m.hyper.epochs) + "\t" + std::to_string(m.hyper.seed) +
         "\n";
  out += FormatFeatureIndex(m.index);
  out += "CLASSES\t" + std::to_string(m.classes.size()) + "\n";
  for (std::size_t c = 0; c < m.classes.size(); ++c) {
    out += m.classes[c] + "\t" + FormatDouble(m.bias[c]) + "\n";
  }
  out += "WEIGHTS\n";
  for (std::size_t c = 0; c < m.classes.size(); ++c) {
    out += std::to_string(c);
    for (std::size_t f = 0; f < m.weights[c].size(); ++f) {
      if (m.weights[c][f] == 0.0) continue;
      out += '\t';
      out += FormatIndexedValue(f, m.weights[c][f]);
    }
    out += '\n';
  }
  out += "END\n";
  return out;
}

LinearSvmModel ParseLinearSvm(std::string_view contents) {
  ModelReader in(contents, "SVM", 1);
  LinearSvmModel m;
  m.source = ReadSource(in);
  auto hyper = in.Section("HYPER");
  if (hyper.size() != 3) in.Fail("bad HYPER line");
  m.hyper.lambda = in.ParseValue(hyper[0]);
  m.hyper.epochs = in.ParseCount(hyper[1]);
  m.hyper.seed = in.ParseCount(hyper[2]);
  m.index = ReadFeatureIndex(in);
  auto classes = in.Section("CLASSES");
  if (classes.size() != 1) in.Fail("bad CLASSES header");
  const std::size_t k = in.ParseCount(classes[0]);
  for (std::size_t c = 0; c < k; ++c) {
    auto cols = SplitOn(in.Next(), '\t');
    if (cols.size() != 2) in.Fail("bad class row");
    m.classes.emplace_back(cols[0]);
    m.bias.push_back(in.ParseValue(cols[1]));
    m.weights.emplace_back(m.index.size(), 0.0);
  }
  in.Section("WEIGHTS");
  for (std::size_t c = 0; c < k; ++c) {
    auto cols = SplitOn(in.Next(), '\t');
    if (in.ParseCount(cols[0]) != c) in.Fail("class rows out of order");
    for (std::size_t i = 1; i < cols.size(); ++i) {
      std::size_t colon = cols[i].find(':');
      if (colon == std::string_view::npos) in.Fail("expected index:value");
      std::size_t f = in.ParseCount(cols[i].substr(0, colon));
      if (f >= m.index.size()) in.Fail("feature id out of range");
      m.weights[c][f] = in.ParseValue(cols[i].substr(colon + 1));
    }
  }
  in.ExpectEnd();
  return m;
}

void SaveLinearSvm(const LinearSvmModel& model, const std::string& path) {
  WriteFile(path, SerializeLinearSvm(model));
}

LinearSvmModel LoadLinearSvm(const std::string& path) {
  return ParseLinearSvm(ReadFile(path));
}

}  // namespace mathtext
