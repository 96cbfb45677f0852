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

#ifndef MATHTEXT_INGEST_H_
#define MATHTEXT_INGEST_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mathtext/tagset.h"

namespace mathtext {

// Readers for every external data file. All formats are TAB-separated UTF-8
// text; parse errors carry the 1-based line number.

struct TaggedWord {
  std::string surface;
  TagId tag = 0;

  bool operator==(const TaggedWord&) const = default;
};

struct TaggedCorpus {
  std::vector<std::vector<TaggedWord>> sentences;
  std::string source_name;

  std::size_t token_count() const;
  bool operator==(const TaggedCorpus&) const = default;
};

// Parses `surface<TAB>tag` lines with blank-line sentence separation.
TaggedCorpus ParseTaggedCorpus(std::string_view contents, const TagSet& tagset,
                               std::string source_name = "");
TaggedCorpus ReadTaggedCorpus(const std::string& path, const TagSet& tagset);

// Inverse of ParseTaggedCorpus.
std::string FormatTaggedCorpus(const TaggedCorpus& corpus,
                               const TagSet& tagset);

enum class LexiconKind { kAcronym, kPersonName, kNamedEntity, kPhraseStoplist };

std::string_view LexiconKindName(LexiconKind kind);
std::optional<LexiconKind> ParseLexiconKind(std::string_view name);

struct LexiconEntry {
  // Case-folded for every kind except acronyms.
  std::string key;
  // Whitespace tokens of `key`, used for multi-token matching.
  std::vector<std::string> key_tokens;
  std::vector<std::string> payload;
};

class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(LexiconKind kind, std::vector<LexiconEntry> entries);

  LexiconKind kind() const { return kind_; }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Exact lookup of an already normalized key.
  const LexiconEntry* find(std::string_view key) const;
  std::size_t max_key_tokens() const { return max_key_tokens_; }

 private:
  LexiconKind kind_ = LexiconKind::kNamedEntity;
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t max_key_tokens_ = 0;
};

// One entry per non-blank line: `key<TAB>payload1<TAB>payload2...`.
Lexicon ParseLexicon(std::string_view contents, LexiconKind kind);
Lexicon ReadLexicon(const std::string& path, LexiconKind kind);

struct MscClass {
  std::string code;
  std::string description;
};

struct MscScheme {
  std::vector<MscClass> classes;

  bool contains(std::string_view code) const;
};

// `code<TAB>description` lines; at least two classes.
MscScheme ParseMscScheme(std::string_view contents);
MscScheme ReadMscScheme(const std::string& path);

struct LabeledDocument {
  std::string doc_id;
  std::string text;
  // Sorted, unique MSC top-level codes.
  std::vector<std::string> labels;
};

// `doc_id<TAB>code,code,...<TAB>text`, one document per line.
std::vector<LabeledDocument> ParseLabeledCorpus(std::string_view contents,
                                                const MscScheme& scheme);
// The well-formed codes used by a labeled corpus, for reading one without a
// scheme file. Descriptions are empty.
MscScheme SchemeFromLabels(std::string_view contents);

std::vector<LabeledDocument> ReadLabeledCorpus(const std::string& path,
                                               const MscScheme& scheme);

}  // namespace mathtext

#endif  // MATHTEXT_INGEST_H_
