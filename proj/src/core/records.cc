// Copyright 2026 The SDTK Authors.
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

#include "core/records.h"

#include "core/errors.h"

namespace sdtk {

const Json& RequireField(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("record is not a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string RequireString(const Json& j, const char* key) {
  const Json& v = RequireField(j, key);
  if (!v.is_string()) {
    throw ParseError(std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

std::size_t RequireIndex(const Json& j, const char* key) {
  const Json& v = RequireField(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field '") + key +
                     "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::optional<std::string> OptionalString(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw ParseError(std::string("field '") + key + "' must be a string or null");
  }
  return it->get<std::string>();
}

Json ToJson(const Document& doc) {
  Json j = {{"id", doc.id},
            {"kind", DocumentKindName(doc.kind)},
            {"text", doc.text},
            {"parent_id", nullptr},
            {"thread_id", doc.thread_id}};
  if (doc.parent_id) j["parent_id"] = *doc.parent_id;
  return j;
}

Json ToJson(const DisclosureSpan& span) {
  return {{"doc_id", span.doc_id},
          {"start", span.start},
          {"end", span.end},
          {"category", CategoryName(span.category)},
          {"text", span.text}};
}

Json ToJson(const ValidationReport& report) {
  return {{"fits_context", report.fits_context},
          {"non_trivial", report.non_trivial},
          {"non_empty", report.non_empty},
          {"length_ratio", report.length_ratio},
          {"accepted", report.accepted()},
          {"overlong", report.overlong},
          {"near_duplicate", report.near_duplicate}};
}

Json ToJson(const AbstractionSet& set) {
  Json validation = Json::array();
  for (const auto& v : set.per_candidate_validation) validation.push_back(ToJson(v));
  return {{"span", ToJson(set.span)},
          {"candidates", set.candidates},
          {"rationale", set.rationale ? Json(*set.rationale) : Json(nullptr)},
          {"strategy", StrategyName(set.strategy)},
          {"validation", validation}};
}

Json ToJson(const ImportanceRating& rating) {
  return {{"doc_id", rating.span.doc_id},
          {"span_start", rating.span.start},
          {"span_end", rating.span.end},
          {"level", ImportanceLevelName(rating.level)},
          {"rationale",
           rating.rationale ? Json(*rating.rationale) : Json(nullptr)}};
}

Document DocumentFromJson(const Json& j) {
  Document doc;
  doc.id = RequireString(j, "id");
  auto kind = OptionalString(j, "kind");
  doc.kind = kind ? ParseDocumentKind(*kind) : DocumentKind::kBody;
  doc.text = RequireString(j, "text");
  doc.parent_id = OptionalString(j, "parent_id");
  doc.thread_id = OptionalString(j, "thread_id").value_or(doc.id);
  doc.Validate();
  return doc;
}

DisclosureSpan SpanFromJson(const Json& j) {
  DisclosureSpan span;
  span.doc_id = RequireString(j, "doc_id");
  span.start = RequireIndex(j, "start");
  span.end = RequireIndex(j, "end");
  if (span.start >= span.end) {
    throw ParseError("span start must be less than end");
  }
  span.category = ParseCategoryOrThrow(RequireString(j, "category"));
  span.text = RequireString(j, "text");
  return span;
}

ImportanceRating RatingFromJson(const Json& j) {
  ImportanceRating rating;
  rating.span.doc_id = RequireString(j, "doc_id");
  rating.span.start = RequireIndex(j, "span_start");
  rating.span.end = RequireIndex(j, "span_end");
  const std::string level = RequireString(j, "level");
  auto parsed = ParseImportanceLevel(level);
  if (!parsed) throw ParseError("unknown importance level '" + level + "'");
  rating.level = *parsed;
  rating.rationale = OptionalString(j, "rationale");
  return rating;
}

}  // namespace sdtk
