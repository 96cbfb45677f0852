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

#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "mathtext/error.h"
#include "mathtext/phrases.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace mt = mathtext;

namespace {

const mt::TagSet& Penn() {
  static const mt::TagSet t = mt::TagSet::PennTreebank();
  return t;
}

// A sentence from "word/TAG" items, tokenized against a masked document so
// that spans are real.
struct Doc {
  mt::MaskedText masked;
  std::vector<mt::TaggedSentence> sentences;
};

Doc Tagged(const std::string& text, const std::vector<std::vector<std::string>>& tags) {
  Doc d;
  d.masked = mt::MaskFormulae(text);
  auto sents = mt::TokenizeDocument(d.masked);
  REQUIRE(sents.size() == tags.size());
  for (std::size_t s = 0; s < sents.size(); ++s) {
    REQUIRE(sents[s].size() == tags[s].size());
    mt::TaggedSentence ts;
    for (std::size_t i = 0; i < sents[s].size(); ++i) {
      ts.push_back({sents[s][i], *Penn().find(tags[s][i]), 0.0});
    }
    d.sentences.push_back(ts);
  }
  return d;
}

std::vector<mt::KeyPhraseCandidate> Aggregate(const Doc& d) {
  const auto patterns = mt::DefaultPatterns(Penn());
  std::vector<std::vector<mt::TokenRange>> chunks;
  for (const auto& s : d.sentences) chunks.push_back(mt::ChunkNounPhrases(s, Penn(), patterns));
  return mt::AggregateKeyphrases(chunks, d.sentences, d.masked);
}

mt::KeyPhraseCandidate Candidate(std::string normalized, std::size_t tokens) {
  mt::KeyPhraseCandidate c;
  c.normalized = std::move(normalized);
  c.frequency = 1;
  c.occurrences.push_back({0, {0, tokens}});
  return c;
}

}  // namespace

TEST_CASE("default pattern examples") {
  const auto patterns = mt::DefaultPatterns(Penn());
  auto d1 = Tagged("the stochastic process", {{"DT", "JJ", "NN"}});
  CHECK(mt::ChunkNounPhrases(d1.sentences[0], Penn(), patterns) ==
        std::vector<mt::TokenRange>{{1, 3}});
  auto d2 = Tagged("convergence of martingales", {{"NN", "IN", "NNS"}});
  CHECK(mt::ChunkNounPhrases(d2.sentences[0], Penn(), patterns) ==
        std::vector<mt::TokenRange>{{0, 3}});
  // IN other than "of" does not link.
  auto d3 = Tagged("convergence in measure", {{"NN", "IN", "NN"}});
  CHECK(mt::ChunkNounPhrases(d3.sentences[0], Penn(), patterns) ==
        std::vector<mt::TokenRange>{{0, 1}, {2, 3}});
  auto d4 = Tagged("$L^p$ spaces", {{"FORMULA", "NNS"}});
  CHECK(mt::ChunkNounPhrases(d4.sentences[0], Penn(), patterns) ==
        std::vector<mt::TokenRange>{{0, 2}});
  auto k = Aggregate(d4);
  REQUIRE(k.size() == 1);
  CHECK(k[0].contains_formula);
}

TEST_CASE("pattern file parsing") {
  auto ps = mt::ParsePatterns(
      "# comment\n\nADJ: JJ{+}\nNP: DT{?} NN|NNS{+} IN=of{1} NN{1}\n", Penn());
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].name == "ADJ");
  CHECK(ps[1].elements.size() == 4);
  CHECK(ps[1].elements[0].repetition == mt::Repetition::kOptional);
  CHECK(ps[1].elements[2].symbols == std::vector<mt::ChunkSymbol>{mt::OfSymbol(Penn())});
  for (const char* bad : {"nocolon NN{+}", "X: QQ{+}", "X: NN{x}", "X: JJ{*} NN{?}", ": NN"}) {
    CAPTURE(bad);
    try {
      mt::ParsePattern(bad, Penn());
      FAIL("accepted");
    } catch (const mt::Error& e) {
      CHECK(e.code() == mt::ErrorCode::kBadPattern);
    }
  }
  try {
    mt::ParsePatterns("A: NN{+}\nB: ZZ{+}\n", Penn());
    FAIL("accepted");
  } catch (const mt::Error& e) {
    CHECK(e.line() == 2u);
  }
}

TEST_CASE("chunker agrees with the regex oracle") {
  std::mt19937_64 rng(1234);
  const auto defaults = mt::DefaultPatterns(Penn());
  std::vector<mt::ChunkSymbol> alphabet;
  for (const char* t : {"DT", "JJ", "VBN", "VBG", "NN", "NNS", "NNP", "NNPS",
                        "FORMULA", "IN", "VBZ", ",", "CC"}) {
    alphabet.push_back(*Penn().find(t));
  }
  alphabet.push_back(mt::OfSymbol(Penn()));
  auto random_symbols = [&] {
    std::vector<mt::ChunkSymbol> s(std::uniform_int_distribution<std::size_t>(0, 12)(rng));
    for (auto& x : s) x = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    return s;
  };
  for (int i = 0; i < 2000; ++i) {
    auto s = random_symbols();
    CHECK(mt::ChunkNounPhrases(s, defaults) == mt::testing::RegexChunkOracle(s, defaults));
  }
  // Random user patterns over a small alphabet.
  const std::vector<std::string> names = {"JJ", "NN", "NNS", "IN", "DT", "FORMULA"};
  const char* reps = "1?+*";
  for (int i = 0; i < 300; ++i) {
    std::vector<mt::TagPattern> patterns;
    const int np = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int p = 0; p < np; ++p) {
      std::string line = "P" + std::to_string(p) + ":";
      const int ne = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int e = 0; e < ne; ++e) {
        line += " " + names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)];
        if (std::uniform_int_distribution<int>(0, 1)(rng)) {
          line += "|" + names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)];
        }
        line += "{" + std::string(1, reps[e == 0 ? 0 : std::uniform_int_distribution<int>(0, 3)(rng)]) + "}";
      }
      patterns.push_back(mt::ParsePattern(line, Penn()));
    }
    for (int j = 0; j < 10; ++j) {
      auto s = random_symbols();
      CHECK(mt::ChunkNounPhrases(s, patterns) == mt::testing::RegexChunkOracle(s, patterns));
    }
  }
}

TEST_CASE("chunk ranges are ordered and depend only on tags") {
  std::mt19937_64 rng(77);
  const auto patterns = mt::DefaultPatterns(Penn());
  for (int i = 0; i < 500; ++i) {
    std::vector<mt::ChunkSymbol> s(std::uniform_int_distribution<std::size_t>(0, 15)(rng));
    for (auto& x : s) x = std::uniform_int_distribution<mt::ChunkSymbol>(0, Penn().size())(rng);
    auto r = mt::ChunkNounPhrases(s, patterns);
    for (std::size_t k = 0; k < r.size(); ++k) {
      CHECK(r[k].begin < r[k].end);
      CHECK(r[k].end <= s.size());
      if (k) CHECK(r[k - 1].end <= r[k].begin);
    }
  }
  auto a = Tagged("the big dog", {{"DT", "JJ", "NN"}});
  auto b = Tagged("a small cat", {{"DT", "JJ", "NN"}});
  CHECK(mt::ChunkNounPhrases(a.sentences[0], Penn(), patterns) ==
        mt::ChunkNounPhrases(b.sentences[0], Penn(), patterns));
}

TEST_CASE("aggregation normalizes and merges") {
  auto d = Tagged("Every Banach space is reflexive. Some Banach spaces are not.",
                  {{"DT", "NNP", "NN", "VBZ", "JJ", "."}, {"DT", "NNP", "NNS", "VBP", "RB", "."}});
  auto k = Aggregate(d);
  REQUIRE(k.size() == 1);
  CHECK(k[0].normalized == "banach space");
  CHECK(k[0].frequency == 2);
  CHECK(k[0].surfaces == std::vector<std::string>{"Banach space", "Banach spaces"});
  REQUIRE(k[0].spans.size() == 2);
  CHECK(k[0].spans[0] == mt::ByteRange{6, 18});

  auto lp = Tagged("On $L^p$ spaces.", {{"IN", "FORMULA", "NNS", "."}});
  auto kl = Aggregate(lp);
  REQUIRE(kl.size() == 1);
  CHECK(kl[0].normalized == "$L^p$ spaces");
  CHECK(kl[0].spans[0] == mt::ByteRange{3, 15});

  // Double s is not a plural.
  auto ss = Tagged("The class and the clas.", {{"DT", "NN", "CC", "DT", "NN", "."}});
  auto ks = Aggregate(ss);
  CHECK(ks.size() == 2);

  auto none = Tagged("It is.", {{"PRP", "VBZ", "."}});
  CHECK(Aggregate(none).empty());
}

TEST_CASE("aggregation conserves chunk counts and sorts") {
  const auto& p = mt::testing::FixturePipeline();
  for (const auto& doc : mt::testing::FixtureAbstracts()) {
    auto prepared = p.Prepare(doc.text);
    std::size_t chunks = 0;
    std::vector<std::vector<mt::TokenRange>> all;
    for (const auto& s : prepared.tagged) {
      all.push_back(mt::ChunkNounPhrases(s, Penn(), p.resources().patterns));
      chunks += all.back().size();
    }
    auto k = mt::AggregateKeyphrases(all, prepared.tagged, prepared.masked);
    std::size_t total = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      total += k[i].frequency;
      CHECK(k[i].frequency == k[i].occurrences.size());
      CHECK(k[i].spans.size() == k[i].occurrences.size());
      if (i) {
        CHECK((k[i - 1].frequency > k[i].frequency ||
               (k[i - 1].frequency == k[i].frequency && k[i - 1].normalized < k[i].normalized)));
      }
      for (const auto& sp : k[i].spans) {
        const std::string slice = doc.text.substr(sp.begin, sp.size());
        CHECK(std::find(k[i].surfaces.begin(), k[i].surfaces.end(), slice) != k[i].surfaces.end());
      }
    }
    CHECK(total == chunks);
  }
}

TEST_CASE("filtering") {
  auto stop = mt::ParseLexicon("paper\nauthors\nresults\n", mt::LexiconKind::kPhraseStoplist);
  std::vector<mt::KeyPhraseCandidate> c = {Candidate("paper", 1), Candidate("eigenvalue problem", 2),
                                           Candidate("ab", 1), Candidate("$x$", 1),
                                           Candidate("ab cd", 2)};
  auto f = mt::FilterKeyphrases(c, stop);
  REQUIRE(f.size() == 3);
  CHECK(f[0].normalized == "eigenvalue problem");
  CHECK(f[1].normalized == "$x$");
  CHECK(f[2].normalized == "ab cd");
  auto empty = mt::FilterKeyphrases(c, mt::Lexicon(mt::LexiconKind::kPhraseStoplist, {}));
  CHECK(empty.size() == 4);
  auto twice = mt::FilterKeyphrases(f, stop);
  REQUIRE(twice.size() == f.size());
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(twice[i].normalized == f[i].normalized);
  CHECK_THROWS_AS(mt::FilterKeyphrases(c, mt::ParseLexicon("x\n", mt::LexiconKind::kAcronym)),
                  mt::Error);
}
