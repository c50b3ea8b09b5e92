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

#ifndef SDTK_IMPORTANCE_IMPORTANCE_H_
#define SDTK_IMPORTANCE_IMPORTANCE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abstract/prompt.h"
#include "core/types.h"
#include "llm/client.h"

namespace sdtk::importance {

enum class SpanLocation { kTitle, kBody, kComment };

// What a rater sees for one span. The unit containing the span (title, body
// or comment) carries <disclosure></disclosure> markers around it.
struct RatingContext {
  DisclosureSpan span;
  SpanLocation location = SpanLocation::kBody;
  std::optional<std::string> title;
  std::optional<std::string> post_body;
  std::optional<std::string> comment;
  std::optional<std::string> parent_comment;
  std::string marked_text;
};

// Inserts the markers around code points [start, end) of `text`.
std::string MarkDisclosure(std::string_view text, SpanRange range);

// Title and body for spans in the post; for a comment, the comment and its
// parent comment when the parent is a comment, plus title and body. Sibling
// and descendant comments are never included. Throws InputError when the
// span's document is not in `thread`; RangeError on a stale span.
RatingContext AssembleContext(const DisclosureSpan& span,
                              std::span<const Document> thread);

// Majority of exactly three levels; Moderate when all three differ. Throws
// InputError for any other count.
ImportanceLevel AggregateGold(std::span<const ImportanceLevel> levels);

// Text used for {post_empty_explaination}: empty when there is a body.
std::string PostEmptyNote(const RatingContext& context);

// Template id for a context, e.g. "importance_rate_thought_reply".
std::string RatingTemplateId(const RatingContext& context, bool with_thought);
abstract::Bindings RatingBindings(const RatingContext& context);
std::string BuildRatingPrompt(const RatingContext& context, bool with_thought);

// Prompt asking a teacher to explain a known human rating.
std::string BuildThoughtPrompt(const RatingContext& context,
                               ImportanceLevel human_rating);

struct ParsedRating {
  ImportanceLevel level = ImportanceLevel::kModerate;
  std::optional<std::string> rationale;
};

// Reads {"Importance": "..."} (key and value case-insensitive), taking any
// prose before it as the rationale. A bare level such as "low" is also
// accepted. Throws ParseError otherwise.
ParsedRating ParseRating(std::string_view raw);

// Asks `client` up to `max_attempts` times; attempts after the first bypass
// the cache. Throws ProviderError (bad response) when no attempt yields a
// level.
ImportanceRating RateImportance(const RatingContext& context,
                                llm::LlmClient& client, bool with_thought,
                                int max_attempts = 3);

}  // namespace sdtk::importance

#endif  // SDTK_IMPORTANCE_IMPORTANCE_H_
