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

#ifndef SDTK_CORE_TYPES_H_
#define SDTK_CORE_TYPES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/category.h"
#include "core/span.h"

namespace sdtk {

enum class DocumentKind { kTitle, kBody, kComment };

std::string_view DocumentKindName(DocumentKind kind);
DocumentKind ParseDocumentKind(std::string_view name);

struct Document {
  std::string id;
  DocumentKind kind = DocumentKind::kBody;
  std::string text;
  std::optional<std::string> parent_id;  // comments only
  std::string thread_id;

  // Throws InputError when parent_id is set on a non-comment.
  void Validate() const;
};

struct DisclosureSpan {
  std::string doc_id;
  std::size_t start = 0;
  std::size_t end = 0;
  Category category = Category::kLocation;
  std::string text;  // snapshot of document text [start, end)

  SpanRange range() const { return {start, end}; }

  friend bool operator==(const DisclosureSpan&, const DisclosureSpan&) = default;
};

// Builds a span over `doc_text`, snapshotting its text. Throws RangeError
// unless 0 <= start < end <= length(doc_text).
DisclosureSpan MakeSpan(std::string doc_id, std::string_view doc_text,
                        std::size_t start, std::size_t end, Category category);

// Throws RangeError if the span is out of bounds or its snapshot no longer
// matches `doc_text`.
void CheckSpan(const DisclosureSpan& span, std::string_view doc_text);

// Sorted by (start, end, category).
void SortSpans(std::vector<DisclosureSpan>* spans);

enum class Layer { kGold, kPredicted };

struct AnnotationSet {
  std::string doc_id;
  std::string annotator_id;
  std::vector<DisclosureSpan> spans;
  Layer layer = Layer::kPredicted;
};

enum class ImportanceLevel { kLow, kModerate, kHigh };

std::string_view ImportanceLevelName(ImportanceLevel level);
// Case-insensitive; accepts "Low Importance" style suffixes.
std::optional<ImportanceLevel> ParseImportanceLevel(std::string_view text);

struct ImportanceRating {
  DisclosureSpan span;
  ImportanceLevel level = ImportanceLevel::kModerate;
  std::optional<std::string> rationale;
};

enum class Strategy { kSampling, kEndToEnd, kIterative };

std::string_view StrategyName(Strategy strategy);
Strategy ParseStrategy(std::string_view name);

struct ValidationReport {
  bool fits_context = false;
  bool non_trivial = false;
  bool non_empty = false;
  double length_ratio = 0.0;
  // Flags that never cause rejection.
  bool overlong = false;
  bool near_duplicate = false;

  bool accepted() const { return fits_context && non_trivial && non_empty; }
};

struct AbstractionSet {
  DisclosureSpan span;
  std::vector<std::string> candidates;  // exactly three when complete
  std::optional<std::string> rationale;
  Strategy strategy = Strategy::kEndToEnd;
  std::vector<ValidationReport> per_candidate_validation;
};

}  // namespace sdtk

#endif  // SDTK_CORE_TYPES_H_
