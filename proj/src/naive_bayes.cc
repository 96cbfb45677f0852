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

#include "mathtext/naive_bayes.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "classifier_io.h"
#include "mathtext/error.h"
#include "mathtext/model_io.h"
#include "mathtext/text_util.h"

namespace mathtext {

double NaiveBayesModel::LogLikelihood(std::size_t cls, FeatureId id) const {
  const auto& row = log_likelihood[cls];
  return id < row.size() ? row[id] : row[FeatureIndex::kUnknownId];
}

NaiveBayesModel TrainNaiveBayes(std::span<const TrainingExample> corpus,
                                const FeatureIndex& index, double alpha) {
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::kNonPositiveAlpha, "alpha must be positive");
  }
  std::map<std::string, std::size_t> instances;
  for (const auto& ex : corpus) {
    for (const auto& label : ex.labels) ++instances[label];
  }
  if (instances.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no labeled training instances");
  }

  NaiveBayesModel m;
  m.alpha = alpha;
  m.index = index;
  m.source = corpus.front().features.source;
  const std::size_t dims = index.size();
  const double vocab = static_cast<double>(index.vocabulary_size());
  std::map<std::string, std::size_t> slot;
  for (const auto& [code, n] : instances) {
    slot[code] = m.classes.size();
    m.classes.push_back(code);
  }

  std::vector<std::vector<double>> counts(m.classes.size(),
                                          std::vector<double>(dims, 0.0));
  std::vector<double> totals(m.classes.size(), 0.0);
  double num_instances = 0.0;
  for (const auto& ex : corpus) {
    for (const auto& label : ex.labels) {
      std::size_t c = slot[label];
      num_instances += 1;
      for (const auto& [id, count] : ex.features.counts) {
        FeatureId f = id < dims ? id : FeatureIndex::kUnknownId;
        counts[c][f] += count;
        totals[c] += count;
      }
    }
  }

  for (std::size_t c = 0; c < m.classes.size(); ++c) {
    m.log_prior.push_back(
        std::log(static_cast<double>(instances[m.classes[c]]) / num_instances));
    const double denom = totals[c] + alpha * (vocab + 1.0);
    std::vector<double> row(dims);
    for (std::size_t f = 0; f < dims; ++f) {
      row[f] = std::log((counts[c][f] + alpha) / denom);
    }
    m.log_likelihood.push_back(std::move(row));
  }
  return m;
}

ClassProposal PredictNaiveBayes(const NaiveBayesModel& model,
                                const FeatureVector& x) {
  const std::size_t k = model.classes.size();
  std::vector<double> score(k);
  for (std::size_t c = 0; c < k; ++c) {
    double s = model.log_prior[c];
    for (const auto& [id, count] : x.counts) {
      s += count * model.LogLikelihood(c, id);
    }
    score[c] = s;
  }
  double top = *std::max_element(score.begin(), score.end());
  double sum = 0.0;
  for (double s : score) sum += std::exp(s - top);
  const double log_norm = top + std::log(sum);

  ClassProposal p;
  p.method = ClassifierMethod::kNaiveBayes;
  for (std::size_t c = 0; c < k; ++c) {
    p.ranked.push_back({model.classes[c], std::exp(score[c] - log_norm)});
  }
  SortRanking(p.ranked);
  return p;
}

std::string SerializeNaiveBayes(const NaiveBayesModel& m) {
  std::string out = "NB v1\n";
  out += "SOURCE\t" + std::string(FeatureSourceName(m.source)) + "\n";
  out += "ALPHA\t" + FormatDouble(m.alpha) + "\n";
  out += FormatFeatureIndex(m.index);
  out += "CLASSES\t" + std::to_string(m.classes.size()) + "\n";
  for (std::size_t c = 0; c < m.classes.size(); ++c) {
    // Most entries of a row equal its __UNK__ value; only the rest is stored.
    out += m.classes[c] + "\t" + FormatDouble(m.log_prior[c]) + "\t" +
           FormatDouble(m.log_likelihood[c][FeatureIndex::kUnknownId]) + "\n";
  }
  out += "LOGLIK\n";
  for (std::size_t c = 0; c < m.classes.size(); ++c) {
    const auto& row = m.log_likelihood[c];
    out += std::to_string(c);
    for (std::size_t f = 1; f < row.size(); ++f) {
      if (row[f] == row[FeatureIndex::kUnknownId]) continue;
      out += '\t';
      out += FormatIndexedValue(f, row[f]);
    }
    out += '\n';
  }
  out += "END\n";
  return out;
}

NaiveBayesModel ParseNaiveBayes(std::string_view contents) {
  ModelReader in(contents, "NB", 1);
  NaiveBayesModel m;
  m.source = ReadSource(in);
  auto alpha = in.Section("ALPHA");
  if (alpha.size() != 1) in.Fail("bad ALPHA line");
  m.alpha = in.ParseValue(alpha[0]);
  m.index = ReadFeatureIndex(in);
  auto classes = in.Section("CLASSES");
  if (classes.size() != 1) in.Fail("bad CLASSES header");
  const std::size_t k = in.ParseCount(classes[0]);
  for (std::size_t c = 0; c < k; ++c) {
    auto cols = SplitOn(in.Next(), '\t');
    if (cols.size() != 3) in.Fail("bad class row");
    m.classes.emplace_back(cols[0]);
    m.log_prior.push_back(in.ParseValue(cols[1]));
    m.log_likelihood.emplace_back(m.index.size(), in.ParseValue(cols[2]));
  }
  in.Section("LOGLIK");
  for (std::size_t c = 0; c < k; ++c) {
    auto cols = SplitOn(in.Next(), '\t');
    if (in.ParseCount(cols[0]) != c) in.Fail("class rows out of order");
    for (std::size_t i = 1; i < cols.size(); ++i) {
      std::size_t colon = cols[i].find(':');
      if (colon == std::string_view::npos) in.Fail("expected index:value");
      std::size_t f = in.ParseCount(cols[i].substr(0, colon));
      if (f >= m.index.size()) in.Fail("feature id out of range");
      m.log_likelihood[c][f] = in.ParseValue(cols[i].substr(colon + 1));
    }
  }
  in.ExpectEnd();
  return m;
}

void SaveNaiveBayes(const NaiveBayesModel& model, const std::string& path) {
  WriteFile(path, SerializeNaiveBayes(model));
}

NaiveBayesModel LoadNaiveBayes(const std::string& path) {
  return ParseNaiveBayes(ReadFile(path));
}

}  // namespace mathtext
