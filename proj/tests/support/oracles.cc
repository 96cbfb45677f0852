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

#include "support/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <regex>
#include <string_view>
#include <unordered_map>

namespace mathtext::testing {

std::vector<TagId> BruteForceDecode(const HmmModel& model,
                                    std::span<const Token> tokens) {
  const std::size_t n = model.num_tags();
  const std::size_t len = tokens.size();
  std::vector<TagId> seq(len, 0), best;
  double best_score = -std::numeric_limits<double>::infinity();
  while (true) {
    // Same association order as a left-to-right recurrence.
    double s = model.StartScore(seq[0]) + model.EmissionScore(seq[0], tokens[0]);
    for (std::size_t i = 1; i < len; ++i) {
      s = s + model.TransitionScore(seq[i - 1], seq[i]);
      s = s + model.EmissionScore(seq[i], tokens[i]);
    }
    bool better = best.empty() || s > best_score;
    if (!better && s == best_score) {
      better = std::lexicographical_compare(seq.rbegin(), seq.rend(),
                                            best.rbegin(), best.rend());
    }
    if (better) {
      best = seq;
      best_score = s;
    }
    std::size_t i = 0;
    while (i < len && ++seq[i] == n) seq[i++] = 0;
    if (i == len) break;
  }
  return best;
}

RandomHmmCase RandomHmm(std::mt19937_64& rng, std::size_t max_tags,
                        std::size_t max_tokens, bool quantized) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_tags)(rng);
  const std::size_t len =
      std::uniform_int_distribution<std::size_t>(1, max_tokens)(rng);
  std::vector<std::string> names;
  for (std::size_t t = 0; t < n; ++t) names.push_back("T" + std::to_string(t));
  TagSet tagset(names, std::nullopt);

  auto draw_row = [&](std::size_t k) {
    std::vector<double> row(k);
    if (quantized) {
      std::uniform_int_distribution<int> q(-16, 0);
      for (auto& v : row) v = q(rng) / 4.0;
      return row;
    }
    std::gamma_distribution<double> g(1.0, 1.0);
    double sum = 0;
    for (auto& v : row) sum += (v = g(rng) + 1e-12);
    for (auto& v : row) v = std::log(v / sum);
    return row;
  };

  std::vector<double> start = draw_row(n);
  std::vector<std::vector<double>> trans;
  for (std::size_t p = 0; p < n; ++p) trans.push_back(draw_row(n));
  const std::vector<std::string> vocab = {"w0", "w1", "w2", "w3"};
  // Emissions are a per-tag distribution over the vocabulary and UNK.
  std::vector<std::vector<double>> cols;
  for (std::size_t t = 0; t < n; ++t) cols.push_back(draw_row(vocab.size() + 1));
  std::unordered_map<std::string, std::vector<double>> emissions;
  std::vector<double> unknown(n);
  for (std::size_t w = 0; w < vocab.size(); ++w) {
    std::vector<double> per_tag(n);
    for (std::size_t t = 0; t < n; ++t) per_tag[t] = cols[t][w];
    emissions[vocab[w]] = per_tag;
  }
  for (std::size_t t = 0; t < n; ++t) unknown[t] = cols[t][vocab.size()];

  RandomHmmCase c{HmmModel::FromTables(tagset, start, trans, emissions, unknown),
                  {}};
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size());
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t w = pick(rng);
    Token tok;
    tok.surface = w < vocab.size() ? vocab[w] : "zz" + std::to_string(i);
    tok.kind = TokenKind::kWord;
    c.tokens.push_back(tok);
  }
  return c;
}

namespace {

// Letters and digits only, so no symbol is special inside a bracket
// expression.
char SymbolChar(ChunkSymbol s) {
  static constexpr std::string_view kAlphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
  return kAlphabet.at(s);
}

std::string PatternRegex(const TagPattern& p) {
  std::string re;
  for (const auto& el : p.elements) {
    re += '[';
    for (ChunkSymbol s : el.symbols) re += SymbolChar(s);
    re += ']';
    switch (el.repetition) {
      case Repetition::kOne: break;
      case Repetition::kOptional: re += '?'; break;
      case Repetition::kOneOrMore: re += '+'; break;
      case Repetition::kZeroOrMore: re += '*'; break;
    }
  }
  return re;
}

}  // namespace

std::vector<TokenRange> RegexChunkOracle(std::span<const ChunkSymbol> symbols,
                                         std::span<const TagPattern> patterns) {
  std::string text;
  for (ChunkSymbol s : symbols) text += SymbolChar(s);
  std::vector<std::regex> res;
  for (const auto& p : patterns) {
    res.emplace_back(PatternRegex(p), std::regex::extended);
  }
  std::vector<TokenRange> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    for (const auto& re : res) {
      for (std::size_t len = text.size() - pos; len > best; --len) {
        if (std::regex_match(text.begin() + pos, text.begin() + pos + len, re)) {
          best = len;
          break;
        }
      }
    }
    if (best == 0) {
      ++pos;
    } else {
      out.push_back({pos, pos + best});
      pos += best;
    }
  }
  return out;
}

std::vector<double> BayesRulePosterior(std::span<const TrainingExample> corpus,
                                       const std::vector<std::string>& classes,
                                       std::size_t vocabulary_size,
                                       double alpha, const FeatureVector& x) {
  std::vector<double> instances(classes.size(), 0.0), totals(classes.size(), 0.0);
  std::vector<std::map<FeatureId, double>> counts(classes.size());
  double all = 0;
  for (const auto& ex : corpus) {
    for (const auto& label : ex.labels) {
      const std::size_t c =
          std::find(classes.begin(), classes.end(), label) - classes.begin();
      instances[c] += 1;
      all += 1;
      for (const auto& [f, v] : ex.features.counts) {
        counts[c][f] += v;
        totals[c] += v;
      }
    }
  }
  std::vector<double> joint(classes.size());
  double evidence = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    double p = instances[c] / all;
    for (const auto& [f, v] : x.counts) {
      auto it = counts[c].find(f);
      const double cnt = it == counts[c].end() ? 0.0 : it->second;
      const double lik = (cnt + alpha) / (totals[c] + alpha * (vocabulary_size + 1));
      p *= std::pow(lik, v);
    }
    joint[c] = p;
    evidence += p;
  }
  for (auto& p : joint) p /= evidence;
  return joint;
}

}  // namespace mathtext::testing
