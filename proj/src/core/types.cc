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

#include "core/types.h"

#include <algorithm>
#include <tuple>

#include "core/errors.h"
#include "core/unicode.h"

namespace sdtk {

std::string_view DocumentKindName(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kTitle: return "title";
    case DocumentKind::kBody: return "body";
    case DocumentKind::kComment: return "comment";
  }
  return "body";
}

DocumentKind ParseDocumentKind(std::string_view name) {
  const std::string lower = unicode::ToLower(name);
  if (lower == "title") return DocumentKind::kTitle;
  if (lower == "body" || lower == "post") return DocumentKind::kBody;
  if (lower == "comment") return DocumentKind::kComment;
  throw ParseError("unknown document kind '" + std::string(name) + "'");
}

void Document::Validate() const {
  if (id.empty()) throw InputError("document id must not be empty");
  if (parent_id && kind != DocumentKind::kComment) {
    throw InputError("document " + id + ": parent_id is only valid on comments");
  }
}

DisclosureSpan MakeSpan(std::string doc_id, std::string_view doc_text,
                        std::size_t start, std::size_t end, Category category) {
  unicode::OffsetMap map(doc_text);
  if (!(start < end && end <= map.size())) {
    throw RangeError("span [" + std::to_string(start) + "," +
                     std::to_string(end) + ") invalid for document " + doc_id +
                     " of length " + std::to_string(map.size()));
  }
  DisclosureSpan span;
  span.doc_id = std::move(doc_id);
  span.start = start;
  span.end = end;
  span.category = category;
  const std::size_t b = map.ToByte(start);
  span.text = std::string(doc_text.substr(b, map.ToByte(end) - b));
  return span;
}

void CheckSpan(const DisclosureSpan& span, std::string_view doc_text) {
  const DisclosureSpan fresh =
      MakeSpan(span.doc_id, doc_text, span.start, span.end, span.category);
  if (fresh.text != span.text) {
    throw RangeError("span [" + std::to_string(span.start) + "," +
                     std::to_string(span.end) + ") of document " + span.doc_id +
                     " is stale: snapshot \"" + span.text +
                     "\" but text reads \"" + fresh.text + "\"");
  }
}

void SortSpans(std::vector<DisclosureSpan>* spans) {
  std::stable_sort(spans->begin(), spans->end(),
                   [](const DisclosureSpan& a, const DisclosureSpan& b) {
                     return std::tie(a.start, a.end, a.category) <
                            std::tie(b.start, b.end, b.category);
                   });
}

std::string_view ImportanceLevelName(ImportanceLevel level) {
  switch (level) {
    case ImportanceLevel::kLow: return "Low";
    case ImportanceLevel::kModerate: return "Moderate";
    case ImportanceLevel::kHigh: return "High";
  }
  return "Moderate";
}

std::optional<ImportanceLevel> ParseImportanceLevel(std::string_view text) {
  std::string lower = unicode::ToLower(text);
  auto trim = [](std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n\"'.");
    const auto last = s.find_last_not_of(" \t\r\n\"'.");
    s = first == std::string::npos ? "" : s.substr(first, last - first + 1);
  };
  trim(lower);
  constexpr std::string_view kSuffix = " importance";
  if (lower.size() > kSuffix.size() &&
      lower.compare(lower.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0) {
    lower.resize(lower.size() - kSuffix.size());
  }
  if (lower == "low") return ImportanceLevel::kLow;
  if (lower == "moderate" || lower == "medium") return ImportanceLevel::kModerate;
  if (lower == "high") return ImportanceLevel::kHigh;
  return std::nullopt;
}

std::string_view StrategyName(Strategy strategy) {
  switch (strategy) {
    case Strategy::kSampling: return "sampling";
    case Strategy::kEndToEnd: return "end_to_end";
    case Strategy::kIterative: return "iterative";
  }
  return "end_to_end";
}

Strategy ParseStrategy(std::string_view name) {
  const std::string lower = unicode::ToLower(name);
  if (lower == "sampling") return Strategy::kSampling;
  if (lower == "end_to_end" || lower == "end-to-end" || lower == "e2e") {
    return Strategy::kEndToEnd;
  }
  if (lower == "iterative") return Strategy::kIterative;
  throw InputError("unknown generation strategy '" + std::string(name) + "'");
}

}  // namespace sdtk
