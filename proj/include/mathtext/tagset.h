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

#ifndef MATHTEXT_TAGSET_H_
#define MATHTEXT_TAGSET_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mathtext {

// Index of a tag within its TagSet.
using TagId = std::size_t;

// Ordered set of PoS tags. The order is significant: Viterbi ties and the
// unknown-word fallback both resolve to the lowest index. The sentence-start
// state is virtual and never part of the set.
class TagSet {
 public:
  TagSet() = default;

  // Throws Error(kValidation) on duplicate or empty tags, or when
  // `formula_tag` is given but not one of `tags`.
  explicit TagSet(std::vector<std::string> tags,
                  std::optional<std::string> formula_tag = std::nullopt);

  // The 45 Penn Treebank tags followed by kFormulaTag.
  static TagSet PennTreebank();

  static constexpr std::string_view kFormulaTag = "FORMULA";

  std::size_t size() const { return tags_.size(); }
  const std::string& name(TagId id) const { return tags_[id]; }
  const std::vector<std::string>& names() const { return tags_; }
  std::optional<TagId> find(std::string_view tag) const;
  bool contains(std::string_view tag) const { return find(tag).has_value(); }

  // Tag every formula token is constrained to, if the set has one.
  std::optional<TagId> formula_tag() const { return formula_tag_; }

  bool operator==(const TagSet& other) const {
    return tags_ == other.tags_ && formula_tag_ == other.formula_tag_;
  }

 private:
  std::vector<std::string> tags_;
  std::unordered_map<std::string, TagId> index_;
  std::optional<TagId> formula_tag_;
};

}  // namespace mathtext

#endif  // MATHTEXT_TAGSET_H_
