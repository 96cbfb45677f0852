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

#ifndef MATHTEXT_SRC_CLASSIFIER_IO_H_
#define MATHTEXT_SRC_CLASSIFIER_IO_H_

// Sections shared by the NB and SVM model files.

#include <string>

#include "mathtext/features.h"
#include "mathtext/model_io.h"

namespace mathtext {

inline std::string FormatFeatureIndex(const FeatureIndex& index) {
  std::string out = "FEATURES\t" + std::to_string(index.size()) + "\n";
  for (const auto& name : index.names()) out += EscapeField(name) + "\n";
  return out;
}

inline FeatureIndex ReadFeatureIndex(ModelReader& in) {
  auto header = in.Section("FEATURES");
  if (header.size() != 1) in.Fail("bad FEATURES header");
  const std::size_t n = in.ParseCount(header[0]);
  if (n == 0) in.Fail("feature index lacks __UNK__");
  FeatureIndex index;
  std::string name;
  for (std::size_t i = 0; i < n; ++i) {
    if (!UnescapeField(in.Next(), &name)) in.Fail("bad feature name escape");
    if (index.Intern(name) != i) in.Fail("duplicate or misplaced feature");
  }
  return index;
}

inline FeatureSource ReadSource(ModelReader& in) {
  auto cols = in.Section("SOURCE");
  if (cols.size() != 1) in.Fail("bad SOURCE line");
  auto source = ParseFeatureSource(cols[0]);
  if (!source) in.Fail("unknown feature source");
  return *source;
}

}  // namespace mathtext

#endif  // MATHTEXT_SRC_CLASSIFIER_IO_H_
