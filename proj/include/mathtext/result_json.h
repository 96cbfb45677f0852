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

#ifndef MATHTEXT_RESULT_JSON_H_
#define MATHTEXT_RESULT_JSON_H_

#include <string>

#include "json.hpp"
#include "mathtext/error.h"
#include "mathtext/pipeline.h"

namespace mathtext {

using Json = nlohmann::ordered_json;

Json ResultToJson(const AnalysisResult& result, const TagSet& tagset);

// Compact JSON; byte-identical for equal results.
std::string SerializeResult(const AnalysisResult& result, const TagSet& tagset);

// Plain-text rendering for terminals.
std::string FormatResultText(const AnalysisResult& result,
                             const TagSet& tagset);

Json SchemeToJson(const MscScheme& scheme);

// {"error": message, "code": name}, plus "offset" or "line" when known.
Json ErrorToJson(const Error& error);

}  // namespace mathtext

#endif  // MATHTEXT_RESULT_JSON_H_
