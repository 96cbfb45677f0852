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

#include "mathtext/tagset.h"

#include <utility>

#include "mathtext/error.h"

namespace mathtext {

TagSet::TagSet(std::vector<std::string> tags,
               std::optional<std::string> formula_tag)
    : tags_(std::move(tags)) {
  for (TagId i = 0; i < tags_.size(); ++i) {
    if (tags_[i].empty()) throw Error(ErrorCode::kValidation, "empty tag name");
    if (!index_.emplace(tags_[i], i).second) {
      throw Error(ErrorCode::kValidation, "duplicate tag " + tags_[i]);
    }
  }
  if (formula_tag) {
    formula_tag_ = find(*formula_tag);
    if (!formula_tag_) {
      throw Error(ErrorCode::kValidation,
                  "formula tag " + *formula_tag + " is not in the tag set");
    }
  }
}

TagSet TagSet::PennTreebank() {
  std::vector<std::string> tags = {
      "CC",  "CD",  "DT",   "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS",
      "LS",  "MD",  "NN",   "NNS", "NNP", "NNPS", "PDT", "POS", "PRP",
      "PRP$", "RB", "RBR",  "RBS", "RP",  "SYM", "TO",  "UH",  "VB",
      "VBD", "VBG", "VBN",  "VBP", "VBZ", "WDT", "WP",  "WP$", "WRB",
      "#",   "$",   "``",   "''",  "(",   ")",   ",",   ".",   ":",
      std::string(kFormulaTag)};
  return TagSet(std::move(tags), std::string(kFormulaTag));
}

std::optional<TagId> TagSet::find(std::string_view tag) const {
  auto it = index_.find(std::string(tag));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace mathtext
