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

#include "mathtext/result_json.h"

#include <cstdio>

namespace mathtext {

namespace {

Json SpanJson(const ByteRange& r) { return Json{{"begin", r.begin}, {"end", r.end}}; }

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

Json ResultToJson(const AnalysisResult& result, const TagSet& tagset) {
  Json j;
  j["doc_id"] = result.doc_id;
  j["original_text"] = result.original_text;
  j["pipeline_version"] = result.pipeline_version;

  Json phrases = Json::array();
  for (const auto& c : result.keyphrases) {
    Json p;
    p["normalized"] = c.normalized;
    p["frequency"] = c.frequency;
    p["surfaces"] = c.surfaces;
    p["contains_formula"] = c.contains_formula;
    Json spans = Json::array();
    for (const auto& s : c.spans) spans.push_back(SpanJson(s));
    p["spans"] = std::move(spans);
    Json occ = Json::array();
    for (const auto& o : c.occurrences) {
      occ.push_back({{"sentence", o.sentence},
                     {"token_begin", o.tokens.begin},
                     {"token_end", o.tokens.end}});
    }
    p["occurrences"] = std::move(occ);
    phrases.push_back(std::move(p));
  }
  j["keyphrases"] = std::move(phrases);

  Json proposals = Json::array();
  for (const auto& prop : result.proposals) {
    Json ranked = Json::array();
    for (const auto& sc : prop.ranked) {
      ranked.push_back({{"code", sc.code}, {"score", sc.score}});
    }
    proposals.push_back(
        {{"method", std::string(MethodLabel(prop.method))}, {"ranked", ranked}});
  }
  j["proposals"] = std::move(proposals);

  Json unknown = Json::array();
  for (const auto& e : result.unknown_tokens.entries) {
    unknown.push_back({{"surface", e.surface},
                       {"proposed_tag", tagset.name(e.proposed_tag)},
                       {"confidence", e.confidence},
                       {"count", e.occurrence_count}});
  }
  j["unknown_tokens"] = std::move(unknown);

  Json entities = Json::array();
  for (const auto& m : result.entities) {
    entities.push_back({{"kind", std::string(EntityKindName(m.kind))},
                        {"sentence", m.sentence},
                        {"token_begin", m.tokens.begin},
                        {"token_end", m.tokens.end},
                        {"span", SpanJson(m.span)},
                        {"matched_key", m.matched_key},
                        {"payload", m.payload}});
  }
  j["entities"] = std::move(entities);
  return j;
}

std::string SerializeResult(const AnalysisResult& result,
                            const TagSet& tagset) {
  return ResultToJson(result, tagset).dump();
}

std::string FormatResultText(const AnalysisResult& result,
                             const TagSet& tagset) {
  std::string out = "document " + result.doc_id + "\n\nkey phrases\n";
  for (const auto& c : result.keyphrases) {
    out += "  " + std::to_string(c.frequency) + "\t" + c.normalized + "\n";
  }
  out += "\nclassification\n";
  for (const auto& p : result.proposals) {
    out += "  " + std::string(MethodLabel(p.method)) + ":";
    const std::size_t shown = std::min<std::size_t>(p.ranked.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
      out += " " + p.ranked[i].code + " (" + Fixed(p.ranked[i].score, 3) + ")";
    }
    out += "\n";
  }
  out += "\nunknown tokens\n";
  for (const auto& e : result.unknown_tokens.entries) {
    out += "  " + e.surface + "\t" + tagset.name(e.proposed_tag) + "\t" +
           Fixed(e.confidence, 3) + "\t" + std::to_string(e.occurrence_count) +
           "\n";
  }
  if (!result.entities.empty()) {
    out += "\nentities\n";
    for (const auto& m : result.entities) {
      out += "  " + std::string(EntityKindName(m.kind)) + "\t" +
             result.original_text.substr(m.span.begin, m.span.size()) + "\n";
    }
  }
  return out;
}

Json SchemeToJson(const MscScheme& scheme) {
  Json classes = Json::array();
  for (const auto& c : scheme.classes) {
    classes.push_back({{"code", c.code}, {"description", c.description}});
  }
  return Json{{"classes", classes}};
}

Json ErrorToJson(const Error& error) {
  Json j{{"error", error.what()},
         {"code", std::string(ErrorCodeName(error.code()))}};
  if (error.byte_offset()) j["offset"] = *error.byte_offset();
  if (error.line()) j["line"] = *error.line();
  return j;
}

}  // namespace mathtext
