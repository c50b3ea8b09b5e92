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

#include "detect/builtin_plugins.h"

#include <algorithm>
#include <array>

#include "core/errors.h"
#include "core/jsonl.h"
#include "core/tokenize.h"
#include "core/unicode.h"

namespace sdtk::detect {
namespace {

constexpr std::array<std::string_view, 11> kFirstPersonCues = {
    "i", "i'm", "im", "i've", "i'd", "i'll", "my", "me", "mine", "myself",
    "ive"};

std::string NormalizeApostrophes(std::string_view word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    // U+2019 RIGHT SINGLE QUOTATION MARK
    if (word.compare(i, 3, "\xE2\x80\x99") == 0) {
      out.push_back('\'');
      i += 2;
    } else {
      out.push_back(word[i]);
    }
  }
  return unicode::ToLower(out);
}

// Keeps a non-overlapping subset, preferring longer ranges, then earlier.
std::vector<LabeledRange> ResolveLongestFirst(std::vector<LabeledRange> ranges) {
  std::sort(ranges.begin(), ranges.end(),
            [](const LabeledRange& a, const LabeledRange& b) {
              if (a.range.length() != b.range.length()) {
                return a.range.length() > b.range.length();
              }
              if (a.range.start != b.range.start) {
                return a.range.start < b.range.start;
              }
              return a.category < b.category;
            });
  std::vector<LabeledRange> kept;
  for (const LabeledRange& r : ranges) {
    const bool clash = std::any_of(
        kept.begin(), kept.end(),
        [&](const LabeledRange& k) { return OverlapLen(k.range, r.range) > 0; });
    if (!clash) kept.push_back(r);
  }
  std::sort(kept.begin(), kept.end(),
            [](const LabeledRange& a, const LabeledRange& b) {
              return a.range < b.range;
            });
  return kept;
}

TaggerOutput LabelTokens(std::string_view text,
                         std::vector<LabeledRange> ranges) {
  TaggerOutput out;
  out.tokens = TokenizeWords(text);
  const std::vector<LabeledRange> kept = ResolveLongestFirst(std::move(ranges));
  out.labels = EncodeBio(out.tokens, kept);
  return out;
}

}  // namespace

TaggerOutput NullTagger::Tag(const Chunk& chunk) const {
  TaggerOutput out;
  out.tokens = TokenizeWords(chunk.text);
  out.labels.assign(out.tokens.size(), BioLabel::O());
  return out;
}

TaggerOutput RulesTagger::Tag(const Chunk& chunk) const {
  std::vector<LabeledRange> ranges;
  for (const RuleMatch& m : rules_.FindAll(chunk.text)) {
    if (m.category && IsTaggerCategory(*m.category)) {
      ranges.push_back({m.range, *m.category});
    }
  }
  return LabelTokens(chunk.text, std::move(ranges));
}

OracleTagger::OracleTagger(std::vector<DisclosureSpan> spans) {
  for (DisclosureSpan& s : spans) by_doc_[s.doc_id].push_back(std::move(s));
}

TaggerOutput OracleTagger::Tag(const Chunk& chunk) const {
  std::vector<LabeledRange> ranges;
  auto it = by_doc_.find(chunk.doc_id);
  if (it != by_doc_.end()) {
    const std::size_t lo = chunk.start_offset;
    const std::size_t hi = lo + unicode::CodepointCount(chunk.text);
    for (const DisclosureSpan& s : it->second) {
      if (!IsTaggerCategory(s.category)) continue;
      const std::size_t start = std::max(s.start, lo);
      const std::size_t end = std::min(s.end, hi);
      if (start >= end) continue;
      ranges.push_back({{start - lo, end - lo}, s.category});
    }
  }
  return LabelTokens(chunk.text, std::move(ranges));
}

bool KeywordGate::ContainsDisclosure(std::string_view sentence) const {
  for (const SpanRange& t : TokenizeWords(sentence)) {
    const std::string word =
        NormalizeApostrophes(unicode::Substr(sentence, t.start, t.end));
    if (std::find(kFirstPersonCues.begin(), kFirstPersonCues.end(), word) !=
        kFirstPersonCues.end()) {
      return true;
    }
  }
  return false;
}

std::vector<SpanRange> PatternRecognizer::FindPersons(
    std::string_view text) const {
  std::vector<SpanRange> out;
  for (const RuleMatch& m : rules_.FindAll(text)) out.push_back(m.range);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sdtk::detect
