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

#include "mathtext/ingest.h"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "mathtext/error.h"
#include "mathtext/text_util.h"

namespace mathtext {

namespace {

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), IsAsciiSpace);
}

bool IsValidMscCode(std::string_view code) {
  if (code.size() != 2 || !IsAsciiDigit(code[0])) return false;
  char c = code[1];
  return IsAsciiDigit(c) || IsAsciiUpper(c) || IsAsciiLower(c);
}

}  // namespace

std::size_t TaggedCorpus::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

TaggedCorpus ParseTaggedCorpus(std::string_view contents, const TagSet& tagset,
                               std::string source_name) {
  TaggedCorpus corpus;
  corpus.source_name = std::move(source_name);
  std::vector<TaggedWord> current;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(contents)) {
    ++line_no;
    if (IsBlank(line)) {
      if (!current.empty()) corpus.sentences.push_back(std::move(current));
      current.clear();
      continue;
    }
    auto cols = SplitOn(line, '\t');
    if (cols.size() != 2 || cols[0].empty() || ContainsWhitespace(cols[0])) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected surface<TAB>tag", line_no);
    }
    auto tag = tagset.find(cols[1]);
    if (!tag) {
      throw Error(ErrorCode::kUnknownTag,
                  "tag '" + std::string(cols[1]) + "' not in tag set", line_no);
    }
    current.push_back({std::string(cols[0]), *tag});
  }
  if (!current.empty()) corpus.sentences.push_back(std::move(current));
  if (corpus.sentences.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus has no sentences",
                line_no + 1);
  }
  return corpus;
}

TaggedCorpus ReadTaggedCorpus(const std::string& path, const TagSet& tagset) {
  return ParseTaggedCorpus(ReadFile(path), tagset, path);
}

std::string FormatTaggedCorpus(const TaggedCorpus& corpus,
                               const TagSet& tagset) {
  std::string out;
  for (const auto& sentence : corpus.sentences) {
    for (const auto& word : sentence) {
      out += word.surface;
      out += '\t';
      out += tagset.name(word.tag);
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

std::string_view LexiconKindName(LexiconKind kind) {
  switch (kind) {
    case LexiconKind::kAcronym: return "acronym";
    case LexiconKind::kPersonName: return "person_name";
    case LexiconKind::kNamedEntity: return "named_entity";
    case LexiconKind::kPhraseStoplist: return "phrase_stoplist";
  }
  return "unknown";
}

std::optional<LexiconKind> ParseLexiconKind(std::string_view name) {
  for (LexiconKind k : {LexiconKind::kAcronym, LexiconKind::kPersonName,
                        LexiconKind::kNamedEntity,
                        LexiconKind::kPhraseStoplist}) {
    if (LexiconKindName(k) == name) return k;
  }
  return std::nullopt;
}

Lexicon::Lexicon(LexiconKind kind, std::vector<LexiconEntry> entries)
    : kind_(kind), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!index_.emplace(entries_[i].key, i).second) {
      throw Error(ErrorCode::kDuplicateKey,
                  "duplicate lexicon key " + entries_[i].key);
    }
    max_key_tokens_ = std::max(max_key_tokens_, entries_[i].key_tokens.size());
  }
}

const LexiconEntry* Lexicon::find(std::string_view key) const {
  auto it = index_.find(std::string(key));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

Lexicon ParseLexicon(std::string_view contents, LexiconKind kind) {
  std::vector<LexiconEntry> entries;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(contents)) {
    ++line_no;
    if (IsBlank(line)) continue;
    auto cols = SplitOn(line, '\t');
    LexiconEntry entry;
    for (std::string_view tok : SplitWhitespace(cols[0])) {
      entry.key_tokens.emplace_back(kind == LexiconKind::kAcronym
                                        ? std::string(tok)
                                        : CaseFold(tok));
    }
    if (entry.key_tokens.empty()) {
      throw Error(ErrorCode::kMalformedLine, "empty lexicon key", line_no);
    }
    for (const auto& tok : entry.key_tokens) {
      if (!entry.key.empty()) entry.key += ' ';
      entry.key += tok;
    }
    for (std::size_t c = 1; c < cols.size(); ++c) {
      if (cols[c].empty()) {
        throw Error(ErrorCode::kMalformedLine, "empty payload column", line_no);
      }
      entry.payload.emplace_back(kind == LexiconKind::kPersonName
                                     ? CaseFold(cols[c])
                                     : std::string(cols[c]));
    }
    if (!seen.emplace(entry.key, line_no).second) {
      throw Error(ErrorCode::kDuplicateKey, "duplicate key " + entry.key,
                  line_no);
    }
    entries.push_back(std::move(entry));
  }
  return Lexicon(kind, std::move(entries));
}

Lexicon ReadLexicon(const std::string& path, LexiconKind kind) {
  return ParseLexicon(ReadFile(path), kind);
}

bool MscScheme::contains(std::string_view code) const {
  return std::any_of(classes.begin(), classes.end(),
                     [&](const MscClass& c) { return c.code == code; });
}

MscScheme ParseMscScheme(std::string_view contents) {
  MscScheme scheme;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(contents)) {
    ++line_no;
    if (IsBlank(line)) continue;
    auto cols = SplitOn(line, '\t');
    if (cols.size() != 2 || !IsValidMscCode(cols[0]) || cols[1].empty()) {
      throw Error(ErrorCode::kMalformedLine, "expected code<TAB>description",
                  line_no);
    }
    if (!seen.emplace(cols[0]).second) {
      throw Error(ErrorCode::kDuplicateCode,
                  "duplicate MSC code " + std::string(cols[0]), line_no);
    }
    scheme.classes.push_back({std::string(cols[0]), std::string(cols[1])});
  }
  if (scheme.classes.size() < 2) {
    throw Error(ErrorCode::kTooFewClasses,
                "an MSC scheme needs at least 2 classes", line_no + 1);
  }
  return scheme;
}

MscScheme ReadMscScheme(const std::string& path) {
  return ParseMscScheme(ReadFile(path));
}

std::vector<LabeledDocument> ParseLabeledCorpus(std::string_view contents,
                                                const MscScheme& scheme) {
  std::vector<LabeledDocument> docs;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(contents)) {
    ++line_no;
    if (IsBlank(line)) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 =
        t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected doc_id<TAB>codes<TAB>text", line_no);
    }
    LabeledDocument doc;
    doc.doc_id = std::string(line.substr(0, t1));
    doc.text = std::string(line.substr(t2 + 1));
    if (doc.doc_id.empty() || IsBlank(doc.text)) {
      throw Error(ErrorCode::kMalformedLine, "empty doc_id or text", line_no);
    }
    for (std::string_view code : SplitOn(line.substr(t1 + 1, t2 - t1 - 1), ',')) {
      if (!scheme.contains(code)) {
        throw Error(ErrorCode::kUnknownLabel,
                    "label '" + std::string(code) + "' not in MSC scheme",
                    line_no);
      }
      doc.labels.emplace_back(code);
    }
    std::sort(doc.labels.begin(), doc.labels.end());
    doc.labels.erase(std::unique(doc.labels.begin(), doc.labels.end()),
                     doc.labels.end());
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<LabeledDocument> ReadLabeledCorpus(const std::string& path,
                                               const MscScheme& scheme) {
  return ParseLabeledCorpus(ReadFile(path), scheme);
}

MscScheme SchemeFromLabels(std::string_view contents) {
  MscScheme scheme;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(contents)) {
    ++line_no;
    if (IsBlank(line)) continue;
    auto cols = SplitOn(line, '\t');
    if (cols.size() < 3) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected doc_id<TAB>codes<TAB>text", line_no);
    }
    for (std::string_view code : SplitOn(cols[1], ',')) {
      if (!IsValidMscCode(code)) {
        throw Error(ErrorCode::kUnknownLabel,
                    "malformed MSC code '" + std::string(code) + "'", line_no);
      }
      if (!scheme.contains(code)) scheme.classes.push_back({std::string(code), ""});
    }
  }
  std::sort(scheme.classes.begin(), scheme.classes.end(),
            [](const MscClass& a, const MscClass& b) { return a.code < b.code; });
  return scheme;
}

}  // namespace mathtext
