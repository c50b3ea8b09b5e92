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

#include "detect/fallback.h"

#include <algorithm>
#include <optional>

#include "core/errors.h"
#include "core/unicode.h"
#include "detect/merge.h"

namespace sdtk::detect {
namespace {

template <typename F>
std::vector<DisclosureSpan> GateRanges(const std::string& doc_id,
                                       std::string_view text,
                                       const std::vector<SpanRange>& ranges,
                                       Category category,
                                       const SentenceGate& gate,
                                       const SentenceSplitter* splitter,
                                       F&& on_bad_range) {
  std::vector<DisclosureSpan> out;
  if (ranges.empty()) return out;
  const SentenceSplitter& split = splitter ? *splitter : DefaultSentenceSplitter();
  const std::vector<SpanRange> sentences = split.Split(text);
  const std::size_t len = unicode::CodepointCount(text);
  for (const SpanRange& r : ranges) {
    if (r.empty() || r.end > len) {
      on_bad_range(r);
      continue;
    }
    const SpanRange ctx = EnclosingSentences(sentences, r);
    if (!gate.ContainsDisclosure(unicode::Substr(text, ctx.start, ctx.end))) {
      continue;
    }
    out.push_back(MakeSpan(doc_id, text, r.start, r.end, category));
  }
  SortSpans(&out);
  return out;
}

}  // namespace

SpanRange EnclosingSentences(std::span<const SpanRange> sentences,
                             SpanRange range) {
  std::optional<SpanRange> hull;
  for (const SpanRange& s : sentences) {
    if (OverlapLen(s, range) == 0) continue;
    if (!hull) {
      hull = s;
    } else {
      hull->end = std::max(hull->end, s.end);
    }
  }
  return hull.value_or(range);
}

std::vector<DisclosureSpan> DetectContact(const std::string& doc_id,
                                          std::string_view text,
                                          const RegexRuleSet& rules,
                                          const SentenceGate& gate,
                                          const SentenceSplitter* splitter) {
  std::vector<SpanRange> ranges;
  for (const RuleMatch& m : rules.FindAll(text)) ranges.push_back(m.range);
  return MergeSpans(GateRanges(doc_id, text, ranges, Category::kContact, gate,
                               splitter, [](SpanRange) {}));
}

std::vector<DisclosureSpan> DetectName(const std::string& doc_id,
                                       std::string_view text,
                                       const PersonRecognizer* recognizer,
                                       const SentenceGate& gate,
                                       const SentenceSplitter* splitter) {
  if (recognizer == nullptr) {
    throw ConfigError("Name detection needs a person recognizer");
  }
  if (text.empty()) return {};
  return GateRanges(doc_id, text, recognizer->FindPersons(text),
                    Category::kName, gate, splitter, [](SpanRange r) {
                      throw PluginError("recognizer returned bad range [" +
                                        std::to_string(r.start) + ", " +
                                        std::to_string(r.end) + ")");
                    });
}

}  // namespace sdtk::detect
