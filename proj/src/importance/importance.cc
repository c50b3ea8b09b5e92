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

#include "importance/importance.h"

#include <algorithm>
#include <cctype>

#include "abstract/parse.h"
#include "core/errors.h"
#include "core/unicode.h"
#include "spdlog/spdlog.h"

namespace sdtk::importance {
namespace {

const Document* FindKind(std::span<const Document> thread, DocumentKind kind) {
  for (const Document& d : thread) {
    if (d.kind == kind) return &d;
  }
  return nullptr;
}

std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string MarkDisclosure(std::string_view text, SpanRange range) {
  const std::string before = unicode::Substr(text, 0, range.start);
  const std::string inside = unicode::Substr(text, range.start, range.end);
  const std::string after =
      unicode::Substr(text, range.end, unicode::CodepointCount(text));
  return before + "<disclosure>" + inside + "</disclosure>" + after;
}

RatingContext AssembleContext(const DisclosureSpan& span,
                              std::span<const Document> thread) {
  const Document* doc = nullptr;
  for (const Document& d : thread) {
    if (d.id == span.doc_id) doc = &d;
  }
  if (doc == nullptr) {
    throw InputError("document '" + span.doc_id + "' is not in the thread");
  }
  CheckSpan(span, doc->text);

  RatingContext ctx;
  ctx.span = span;
  ctx.marked_text = MarkDisclosure(doc->text, span.range());
  const Document* title = FindKind(thread, DocumentKind::kTitle);
  const Document* body = FindKind(thread, DocumentKind::kBody);
  if (title) ctx.title = title->text;
  if (body && !body->text.empty()) ctx.post_body = body->text;

  switch (doc->kind) {
    case DocumentKind::kTitle:
      ctx.location = SpanLocation::kTitle;
      ctx.title = ctx.marked_text;
      break;
    case DocumentKind::kBody:
      ctx.location = SpanLocation::kBody;
      ctx.post_body = ctx.marked_text;
      break;
    case DocumentKind::kComment:
      ctx.location = SpanLocation::kComment;
      ctx.comment = ctx.marked_text;
      if (doc->parent_id) {
        for (const Document& d : thread) {
          if (d.id == *doc->parent_id && d.kind == DocumentKind::kComment) {
            ctx.parent_comment = d.text;
          }
        }
      }
      break;
  }
  return ctx;
}

ImportanceLevel AggregateGold(std::span<const ImportanceLevel> levels) {
  if (levels.size() != 3) {
    throw InputError("gold importance needs exactly 3 annotations, got " +
                     std::to_string(levels.size()));
  }
  for (ImportanceLevel l : {ImportanceLevel::kLow, ImportanceLevel::kModerate,
                            ImportanceLevel::kHigh}) {
    if (std::count(levels.begin(), levels.end(), l) >= 2) return l;
  }
  return ImportanceLevel::kModerate;
}

std::string PostEmptyNote(const RatingContext& context) {
  if (context.post_body) return "";
  return "Note: the post body is empty; rely on the title.";
}

std::string RatingTemplateId(const RatingContext& context, bool with_thought) {
  std::string id = with_thought ? "importance_rate_thought" : "importance_rate";
  if (context.location != SpanLocation::kComment) return id + "_post";
  if (context.parent_comment) return id + "_reply";
  return id;
}

abstract::Bindings RatingBindings(const RatingContext& context) {
  abstract::Bindings b;
  b["title"] = context.title.value_or("");
  b["post"] = context.post_body.value_or("");
  b["comment"] = context.comment.value_or("");
  b["parent_comment"] = context.parent_comment.value_or("");
  b["disclosure"] = context.span.text;
  b["post_empty_explaination"] = PostEmptyNote(context);
  return b;
}

std::string BuildRatingPrompt(const RatingContext& context, bool with_thought) {
  return abstract::BuildPrompt(RatingTemplateId(context, with_thought),
                               RatingBindings(context));
}

std::string BuildThoughtPrompt(const RatingContext& context,
                               ImportanceLevel human_rating) {
  std::string id = "importance_thought_gen";
  if (context.location != SpanLocation::kComment) {
    id += "_post";
  } else if (context.parent_comment) {
    id += "_reply";
  }
  abstract::Bindings b = RatingBindings(context);
  b["human_rating"] = std::string(ImportanceLevelName(human_rating));
  return abstract::BuildPrompt(id, b);
}

ParsedRating ParseRating(std::string_view raw) {
  const std::vector<abstract::JsonMatch> objects = abstract::FindJsonObjects(raw);
  for (auto it = objects.rbegin(); it != objects.rend(); ++it) {
    for (const auto& [key, value] : it->object.items()) {
      if (unicode::ToLower(key) != "importance" || !value.is_string()) continue;
      if (auto level = ParseImportanceLevel(value.get<std::string>())) {
        return {*level, abstract::CleanRationale(raw.substr(0, it->begin))};
      }
    }
  }
  if (auto level = ParseImportanceLevel(Trim(raw))) return {*level, std::nullopt};
  throw ParseError("no importance level in model output");
}

ImportanceRating RateImportance(const RatingContext& context,
                                llm::LlmClient& client, bool with_thought,
                                int max_attempts) {
  const std::string template_id = RatingTemplateId(context, with_thought);
  const std::string prompt = BuildRatingPrompt(context, with_thought);
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt < std::max(1, max_attempts); ++attempt) {
    const auto policy =
        attempt == 0 ? llm::CachePolicy::kDefault : llm::CachePolicy::kBypass;
    const std::string raw =
        client.Complete(client.MakeRequest(template_id, prompt, 0.0), policy);
    try {
      ParsedRating parsed = ParseRating(raw);
      ImportanceRating rating;
      rating.span = context.span;
      rating.level = parsed.level;
      rating.rationale = std::move(parsed.rationale);
      return rating;
    } catch (const ParseError& e) {
      last_error = e.what();
      spdlog::warn("importance output rejected (attempt {}): {}", attempt + 1,
                   e.what());
    }
  }
  throw ProviderError(ProviderFailure::kBadResponse,
                      "no importance level after retries: " + last_error);
}

}  // namespace sdtk::importance
