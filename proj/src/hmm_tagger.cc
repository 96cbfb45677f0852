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

#include "mathtext/hmm_tagger.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "mathtext/error.h"
#include "mathtext/model_io.h"
#include "mathtext/text_util.h"

namespace mathtext {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double SafeLog(double numerator, double denominator) {
  if (denominator <= 0.0 || numerator <= 0.0) return kNegInf;
  return std::log(numerator / denominator);
}

std::size_t CodePoints(std::string_view s) { return Utf8Length(s); }

// Last `n` code points of `s`.
std::string_view LastCodePoints(std::string_view s, std::size_t n) {
  std::size_t pos = s.size();
  std::size_t seen = 0;
  while (pos > 0 && seen < n) {
    --pos;
    if ((static_cast<unsigned char>(s[pos]) & 0xC0) != 0x80) ++seen;
  }
  return s.substr(pos);
}

bool StartsUppercase(std::string_view s) {
  if (s.empty()) return false;
  if (IsAsciiUpper(s[0])) return true;
  if (static_cast<unsigned char>(s[0]) == 0xC3 && s.size() > 1) {
    unsigned char d = static_cast<unsigned char>(s[1]);
    return d >= 0x80 && d <= 0x9E && d != 0x97;
  }
  return false;
}

std::string EmissionKey(const Token& token) {
  return token.kind == TokenKind::kFormula ? token.surface
                                           : CaseFold(token.surface);
}

}  // namespace

HmmModel HmmModel::FromTables(
    TagSet tagset, std::vector<double> start,
    std::vector<std::vector<double>> transitions,
    std::unordered_map<std::string, std::vector<double>> emissions,
    std::vector<double> unknown) {
  HmmModel m;
  const std::size_t n = tagset.size();
  if (start.size() != n || transitions.size() != n || unknown.size() != n) {
    throw Error(ErrorCode::kValidation, "table sizes do not match the tag set");
  }
  m.tagset_ = std::move(tagset);
  m.start_ = std::move(start);
  m.trans_.reserve(n * n);
  for (const auto& row : transitions) {
    if (row.size() != n) {
      throw Error(ErrorCode::kValidation, "transition row has wrong size");
    }
    m.trans_.insert(m.trans_.end(), row.begin(), row.end());
  }
  for (const auto& [word, row] : emissions) {
    if (row.size() != n) {
      throw Error(ErrorCode::kValidation, "emission row has wrong size");
    }
  }
  m.emissions_ = std::move(emissions);
  m.emit_floor_.assign(n, kNegInf);
  m.unknown_ = std::move(unknown);
  m.rare_prior_.assign(n, kNegInf);
  return m;
}

double HmmModel::emission_logprob(TagId tag, std::string_view key) const {
  auto it = emissions_.find(std::string(key));
  return it == emissions_.end() ? unknown_[tag] : it->second[tag];
}

bool HmmModel::InVocabulary(std::string_view surface) const {
  return emissions_.count(CaseFold(surface)) > 0 ||
         emissions_.count(std::string(surface)) > 0;
}

TagId HmmModel::Effective(TagId tag) const {
  if (formula_proxy_ && tag == tagset_.formula_tag()) return *formula_proxy_;
  return tag;
}

double HmmModel::StartScore(TagId tag) const { return start_[Effective(tag)]; }

double HmmModel::TransitionScore(TagId prev, TagId tag) const {
  return transition_logprob(Effective(prev), Effective(tag));
}

std::string HmmModel::Signature(std::string_view surface, std::size_t length) {
  std::string sig;
  sig += static_cast<char>('0' + length);
  sig += StartsUppercase(surface) ? '1' : '0';
  sig += std::any_of(surface.begin(), surface.end(), IsAsciiDigit) ? '1' : '0';
  sig += surface.find('-') != std::string_view::npos ? '1' : '0';
  sig += '|';
  std::string folded = CaseFold(surface);
  sig += LastCodePoints(folded, length);
  return sig;
}

double HmmModel::UnknownWordScore(TagId tag, std::string_view surface) const {
  if (std::isinf(rare_prior_[tag])) {
    // No rare-word evidence for this tag (or no suffix model at all).
    bool any = std::any_of(rare_prior_.begin(), rare_prior_.end(),
                           [](double v) { return !std::isinf(v); });
    return any ? kNegInf : unknown_[tag];
  }
  // Successive abstraction over suffix lengths, shortest first.
  double p = std::exp(rare_prior_[tag]);
  std::size_t max_len = std::min(kMaxSuffix, CodePoints(surface));
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto it = suffix_.find(Signature(surface, len));
    if (it == suffix_.end()) break;
    p = (std::exp(it->second[tag]) + suffix_theta_ * p) / (1.0 + suffix_theta_);
  }
  if (p <= 0.0) return kNegInf;
  return unknown_[tag] + std::log(p) - rare_prior_[tag];
}

double HmmModel::EmissionScore(TagId tag, const Token& token) const {
  auto formula = tagset_.formula_tag();
  if (formula) {
    if (token.kind == TokenKind::kFormula) return tag == *formula ? 0.0 : kNegInf;
    if (tag == *formula) return kNegInf;
  }
  std::string key = EmissionKey(token);
  auto it = emissions_.find(key);
  if (it != emissions_.end()) return it->second[tag];
  return UnknownWordScore(tag, token.surface);
}

std::vector<double> HmmModel::EmissionScores(const Token& token) const {
  std::vector<double> scores(num_tags());
  for (TagId t = 0; t < num_tags(); ++t) scores[t] = EmissionScore(t, token);
  return scores;
}

std::vector<double> HmmModel::SuffixPosterior(std::string_view surface) const {
  const std::size_t n = num_tags();
  std::size_t max_len = std::min(kMaxSuffix, CodePoints(surface));
  for (std::size_t len = max_len; len >= 1; --len) {
    auto it = suffix_.find(Signature(surface, len));
    if (it == suffix_.end()) continue;
    std::vector<double> post(n);
    for (TagId t = 0; t < n; ++t) post[t] = std::exp(it->second[t]);
    return post;
  }
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

HmmModel TrainHmm(const TaggedCorpus& corpus, const TagSet& tagset,
                  Smoothing smoothing) {
  if (corpus.sentences.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "cannot train on an empty corpus");
  }
  const std::size_t n = tagset.size();
  const auto formula = tagset.formula_tag();

  std::vector<double> start_count(n, 0.0);
  std::vector<double> trans_count(n * n, 0.0);
  std::vector<double> out_count(n, 0.0);
  std::vector<double> tag_count(n, 0.0);
  // Ordered so that training is independent of hash iteration order.
  std::map<std::string, std::vector<double>> word_tag;
  std::map<std::string, std::size_t> word_freq;

  for (const auto& sentence : corpus.sentences) {
    if (sentence.empty()) continue;
    start_count[sentence.front().tag] += 1;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const auto& w = sentence[i];
      if (w.tag >= n) {
        throw Error(ErrorCode::kUnknownTag, "corpus tag outside the tag set");
      }
      if (i > 0) {
        trans_count[sentence[i - 1].tag * n + w.tag] += 1;
        out_count[sentence[i - 1].tag] += 1;
      }
      tag_count[w.tag] += 1;
      std::string key = w.tag == formula ? w.surface : CaseFold(w.surface);
      auto& row = word_tag[key];
      if (row.empty()) row.assign(n, 0.0);
      row[w.tag] += 1;
      ++word_freq[key];
    }
  }

  HmmModel m;
  m.tagset_ = tagset;
  m.smoothing_ = smoothing;
  const double kt = smoothing.k_trans;
  const double ke = smoothing.k_emit;
  const double num_sentences = static_cast<double>(corpus.sentences.size());

  m.start_.resize(n);
  for (TagId t = 0; t < n; ++t) {
    m.start_[t] = SafeLog(start_count[t] + kt, num_sentences + kt * n);
  }
  m.trans_.resize(n * n);
  for (TagId p = 0; p < n; ++p) {
    for (TagId t = 0; t < n; ++t) {
      m.trans_[p * n + t] =
          SafeLog(trans_count[p * n + t] + kt, out_count[p] + kt * n);
    }
  }

  const double vocab = static_cast<double>(word_tag.size());
  m.emit_floor_.resize(n);
  m.unknown_.resize(n);
  for (TagId t = 0; t < n; ++t) {
    double denom = tag_count[t] + ke * (vocab + 1.0);
    m.emit_floor_[t] = SafeLog(ke, denom);
    m.unknown_[t] = m.emit_floor_[t];
  }
  for (const auto& [word, counts] : word_tag) {
    std::vector<double> row(n);
    for (TagId t = 0; t < n; ++t) {
      row[t] = SafeLog(counts[t] + ke, tag_count[t] + ke * (vocab + 1.0));
    }
    m.emissions_.emplace(word, std::move(row));
  }

  // Suffix model over rare words.
  std::map<std::string, std::vector<double>> sig_count;
  std::vector<double> rare_count(n, 0.0);
  double rare_total = 0.0;
  for (const auto& sentence : corpus.sentences) {
    for (const auto& w : sentence) {
      if (w.tag == formula) continue;
      if (word_freq[CaseFold(w.surface)] > 2) continue;
      rare_count[w.tag] += 1;
      rare_total += 1;
      std::size_t max_len =
          std::min(HmmModel::kMaxSuffix, CodePoints(w.surface));
      for (std::size_t len = 0; len <= max_len; ++len) {
        auto& row = sig_count[HmmModel::Signature(w.surface, len)];
        if (row.empty()) row.assign(n, 0.0);
        row[w.tag] += 1;
      }
    }
  }
  m.rare_prior_.resize(n);
  for (TagId t = 0; t < n; ++t) {
    m.rare_prior_[t] = SafeLog(rare_count[t], rare_total);
  }
  for (const auto& [sig, counts] : sig_count) {
    double total = 0.0;
    for (double c : counts) total += c;
    std::vector<double> row(n);
    for (TagId t = 0; t < n; ++t) row[t] = SafeLog(counts[t], total);
    m.suffix_.emplace(sig, std::move(row));
  }
  // Interpolation weight: standard deviation of the rare-word tag prior.
  if (rare_total > 0) {
    double mean = 1.0 / static_cast<double>(n);
    double var = 0.0;
    for (TagId t = 0; t < n; ++t) {
      double d = rare_count[t] / rare_total - mean;
      var += d * d;
    }
    m.suffix_theta_ = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
  }

  if (formula && tag_count[*formula] == 0) m.formula_proxy_ = tagset.find("NN");
  return m;
}

std::vector<ScoredTag> ViterbiDecode(const HmmModel& model,
                                     std::span<const Token> tokens) {
  const std::size_t n = model.num_tags();
  const std::size_t len = tokens.size();
  if (len == 0 || n == 0) return {};

  std::vector<double> delta(len * n);
  std::vector<TagId> back(len * n, 0);
  std::vector<double> emit = model.EmissionScores(tokens[0]);
  for (TagId t = 0; t < n; ++t) delta[t] = model.StartScore(t) + emit[t];

  for (std::size_t i = 1; i < len; ++i) {
    emit = model.EmissionScores(tokens[i]);
    const double* prev = &delta[(i - 1) * n];
    for (TagId t = 0; t < n; ++t) {
      double best = prev[0] + model.TransitionScore(0, t);
      TagId arg = 0;
      for (TagId p = 1; p < n; ++p) {
        double v = prev[p] + model.TransitionScore(p, t);
        if (v > best) {
          best = v;
          arg = p;
        }
      }
      delta[i * n + t] = best + emit[t];
      back[i * n + t] = arg;
    }
  }

  const double* last = &delta[(len - 1) * n];
  TagId tag = 0;
  for (TagId t = 1; t < n; ++t) {
    if (last[t] > last[tag]) tag = t;
  }
  std::vector<ScoredTag> out(len);
  for (std::size_t i = len; i-- > 0;) {
    out[i] = {tag, delta[i * n + tag]};
    tag = back[i * n + tag];
  }
  return out;
}

UnknownTagProposal ProposeUnknownTag(const HmmModel& model,
                                     std::string_view surface) {
  if (model.InVocabulary(surface)) {
    throw Error(ErrorCode::kKnownToken,
                "'" + std::string(surface) + "' is in the tagger vocabulary");
  }
  std::vector<double> post = model.SuffixPosterior(surface);
  double total = 0.0;
  for (double p : post) total += p;
  TagId best = 0;
  for (TagId t = 1; t < post.size(); ++t) {
    if (post[t] > post[best]) best = t;
  }
  return {best, total > 0.0 ? post[best] / total : 0.0};
}

std::vector<TaggedSentence> TagDocument(
    const HmmModel& model, const std::vector<std::vector<Token>>& sentences) {
  std::vector<TaggedSentence> out;
  out.reserve(sentences.size());
  for (const auto& tokens : sentences) {
    auto tags = ViterbiDecode(model, tokens);
    TaggedSentence tagged;
    tagged.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      tagged.push_back({tokens[i], tags[i].tag, tags[i].log_score});
    }
    out.push_back(std::move(tagged));
  }
  return out;
}

// File layout:
//   HMM v1
//   TAGS n formula|- proxy|- k_trans k_emit      then n tag names
//   TRANS                                       then n+1 rows (start first)
//   EMIT V                                      then n rows "floor unknown",
//                                               then V rows "word t:lp ..."
//   SUFFIX S theta                              then "PRIOR t:lp ...",
//                                               then S rows "sig t:lp ..."
//   END
// Omitted EMIT entries equal the tag's floor; omitted SUFFIX entries are -inf.
std::string HmmModel::Serialize() const {
  const std::size_t n = num_tags();
  auto opt = [](std::optional<TagId> v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::string out = "HMM v1\n";
  out += "TAGS\t" + std::to_string(n) + "\t" + opt(tagset_.formula_tag()) +
         "\t" + opt(formula_proxy_) + "\t" + FormatDouble(smoothing_.k_trans) +
         "\t" + FormatDouble(smoothing_.k_emit) + "\n";
  for (const auto& name : tagset_.names()) out += name + "\n";

  auto row = [&](const double* values) {
    std::string line;
    for (std::size_t t = 0; t < n; ++t) {
      if (t > 0) line += '\t';
      line += FormatDouble(values[t]);
    }
    return line + "\n";
  };
  out += "TRANS\n";
  out += row(start_.data());
  for (TagId p = 0; p < n; ++p) out += row(&trans_[p * n]);

  out += "EMIT\t" + std::to_string(emissions_.size()) + "\n";
  for (TagId t = 0; t < n; ++t) {
    out += FormatDouble(emit_floor_[t]) + "\t" + FormatDouble(unknown_[t]) +
           "\n";
  }
  std::vector<const std::string*> words;
  words.reserve(emissions_.size());
  for (const auto& [w, r] : emissions_) words.push_back(&w);
  std::sort(words.begin(), words.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  for (const std::string* w : words) {
    out += *w;
    const auto& values = emissions_.at(*w);
    for (TagId t = 0; t < n; ++t) {
      if (values[t] == emit_floor_[t]) continue;
      out += '\t';
      out += FormatIndexedValue(t, values[t]);
    }
    out += '\n';
  }

  out += "SUFFIX\t" + std::to_string(suffix_.size()) + "\t" +
         FormatDouble(suffix_theta_) + "\n";
  out += "PRIOR\t" + row(rare_prior_.data());
  std::vector<const std::string*> sigs;
  for (const auto& [s, r] : suffix_) sigs.push_back(&s);
  std::sort(sigs.begin(), sigs.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  for (const std::string* s : sigs) {
    out += *s;
    const auto& values = suffix_.at(*s);
    for (TagId t = 0; t < n; ++t) {
      if (std::isinf(values[t]) && values[t] < 0) continue;
      out += '\t';
      out += FormatIndexedValue(t, values[t]);
    }
    out += '\n';
  }
  out += "END\n";
  return out;
}

HmmModel HmmModel::Parse(std::string_view contents) {
  ModelReader in(contents, "HMM", 1);
  HmmModel m;
  auto header = in.Section("TAGS");
  if (header.size() != 5) in.Fail("bad TAGS header");
  const std::size_t n = in.ParseCount(header[0]);
  if (n == 0) in.Fail("empty tag set");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(in.Next());
  std::optional<std::string> formula;
  if (header[1] != "-") {
    std::size_t f = in.ParseCount(header[1]);
    if (f >= n) in.Fail("formula tag index out of range");
    formula = names[f];
  }
  try {
    m.tagset_ = TagSet(std::move(names), formula);
  } catch (const Error& e) {
    in.Fail(e.what());
  }
  if (header[2] != "-") {
    std::size_t p = in.ParseCount(header[2]);
    if (p >= n) in.Fail("proxy tag index out of range");
    m.formula_proxy_ = p;
  }
  m.smoothing_ = {in.ParseValue(header[3]), in.ParseValue(header[4])};

  auto parse_row = [&](std::string_view line) {
    auto cols = SplitOn(line, '\t');
    if (cols.size() != n) in.Fail("row has wrong number of columns");
    std::vector<double> values(n);
    for (std::size_t t = 0; t < n; ++t) values[t] = in.ParseValue(cols[t]);
    return values;
  };
  // Parses "t:lp" pairs from cols[1..] into `values`.
  auto parse_sparse = [&](const std::vector<std::string_view>& cols,
                          std::vector<double>& values) {
    for (std::size_t c = 1; c < cols.size(); ++c) {
      std::size_t colon = cols[c].find(':');
      if (colon == std::string_view::npos) in.Fail("expected index:value");
      std::size_t t = in.ParseCount(cols[c].substr(0, colon));
      if (t >= n) in.Fail("tag index out of range");
      values[t] = in.ParseValue(cols[c].substr(colon + 1));
    }
  };

  in.Section("TRANS");
  m.start_ = parse_row(in.Next());
  m.trans_.reserve(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    auto values = parse_row(in.Next());
    m.trans_.insert(m.trans_.end(), values.begin(), values.end());
  }

  auto emit = in.Section("EMIT");
  if (emit.size() != 1) in.Fail("bad EMIT header");
  const std::size_t vocab = in.ParseCount(emit[0]);
  m.emit_floor_.resize(n);
  m.unknown_.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    auto cols = SplitOn(in.Next(), '\t');
    if (cols.size() != 2) in.Fail("bad emission floor row");
    m.emit_floor_[t] = in.ParseValue(cols[0]);
    m.unknown_[t] = in.ParseValue(cols[1]);
  }
  for (std::size_t i = 0; i < vocab; ++i) {
    auto cols = SplitOn(in.Next(), '\t');
    if (cols[0].empty()) in.Fail("empty vocabulary entry");
    std::vector<double> values = m.emit_floor_;
    parse_sparse(cols, values);
    if (!m.emissions_.emplace(std::string(cols[0]), std::move(values)).second) {
      in.Fail("duplicate vocabulary entry");
    }
  }

  auto suffix = in.Section("SUFFIX");
  if (suffix.size() != 2) in.Fail("bad SUFFIX header");
  const std::size_t sigs = in.ParseCount(suffix[0]);
  m.suffix_theta_ = in.ParseValue(suffix[1]);
  auto prior = in.Section("PRIOR");
  if (prior.size() != n) in.Fail("bad PRIOR row");
  m.rare_prior_.resize(n);
  for (std::size_t t = 0; t < n; ++t) m.rare_prior_[t] = in.ParseValue(prior[t]);
  for (std::size_t i = 0; i < sigs; ++i) {
    auto cols = SplitOn(in.Next(), '\t');
    std::vector<double> values(n, kNegInf);
    parse_sparse(cols, values);
    if (!m.suffix_.emplace(std::string(cols[0]), std::move(values)).second) {
      in.Fail("duplicate suffix signature");
    }
  }
  in.ExpectEnd();
  return m;
}

void SaveHmm(const HmmModel& model, const std::string& path) {
  WriteFile(path, model.Serialize());
}

HmmModel LoadHmm(const std::string& path) {
  return HmmModel::Parse(ReadFile(path));
}

}  // namespace mathtext
