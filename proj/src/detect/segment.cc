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

#include "detect/segment.h"

#include <array>

#include "core/errors.h"
#include "core/tokenize.h"
#include "core/unicode.h"

namespace sdtk::detect {
namespace {

constexpr std::array<std::u32string_view, 14> kAbbreviations = {
    U"mr", U"mrs", U"ms", U"dr", U"st", U"jr", U"sr", U"vs",
    U"etc", U"e.g", U"i.e", U"u.s", U"approx", U"prof"};

bool IsTerminal(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026;
}

bool IsCloser(char32_t cp) {
  return cp == U'"' || cp == U'\'' || cp == U')' || cp == U']' ||
         cp == 0x2019 || cp == 0x201D;
}

// True when the word ending right before `dot` is a known abbreviation.
bool EndsWithAbbreviation(const std::u32string& text, std::size_t dot) {
  std::size_t begin = dot;
  while (begin > 0 && !unicode::IsSpace(text[begin - 1]) &&
         text[begin - 1] != U'(') {
    --begin;
  }
  std::u32string word;
  for (std::size_t i = begin; i < dot; ++i) {
    word.push_back(unicode::ToLowerAscii(text[i]));
  }
  for (auto abbr : kAbbreviations) {
    if (word == abbr) return true;
  }
  return false;
}

void PushTrimmed(const std::u32string& text, std::size_t begin, std::size_t end,
                 std::vector<SpanRange>* out) {
  while (begin < end && unicode::IsSpace(text[begin])) ++begin;
  while (end > begin && unicode::IsSpace(text[end - 1])) --end;
  if (end > begin) out->push_back({begin, end});
}

std::size_t WordsPerChunk(SegmentStrategy strategy) {
  switch (strategy) {
    case SegmentStrategy::kWords256: return 256;
    case SegmentStrategy::kWords128: return 128;
    case SegmentStrategy::kWords64: return 64;
    default: return 0;
  }
}

}  // namespace

std::string_view SegmentStrategyName(SegmentStrategy strategy) {
  switch (strategy) {
    case SegmentStrategy::kWhole: return "whole";
    case SegmentStrategy::kWords256: return "words256";
    case SegmentStrategy::kWords128: return "words128";
    case SegmentStrategy::kWords64: return "words64";
    case SegmentStrategy::kSentence: return "sentence";
  }
  return "sentence";
}

SegmentStrategy ParseSegmentStrategy(std::string_view name) {
  const std::string lower = unicode::ToLower(name);
  if (lower == "whole" || lower == "normal") return SegmentStrategy::kWhole;
  if (lower == "words256" || lower == "256") return SegmentStrategy::kWords256;
  if (lower == "words128" || lower == "128") return SegmentStrategy::kWords128;
  if (lower == "words64" || lower == "64") return SegmentStrategy::kWords64;
  if (lower == "sentence") return SegmentStrategy::kSentence;
  throw InputError("unknown segmentation strategy '" + std::string(name) + "'");
}

std::vector<SpanRange> RuleSentenceSplitter::Split(std::string_view utf8) const {
  const std::u32string text = unicode::Decode(utf8);
  std::vector<SpanRange> out;
  std::size_t begin = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = text[i];
    if (cp == U'\n' || cp == U'\r') {
      PushTrimmed(text, begin, i, &out);
      begin = ++i;
      continue;
    }
    if (!IsTerminal(cp)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && IsTerminal(text[j])) ++j;
    while (j < text.size() && IsCloser(text[j])) ++j;
    const bool at_boundary = j == text.size() || unicode::IsSpace(text[j]);
    const bool single_dot = j - i == 1 && cp == U'.';
    if (at_boundary && !(single_dot && EndsWithAbbreviation(text, i))) {
      PushTrimmed(text, begin, j, &out);
      begin = j;
    }
    i = j;
  }
  PushTrimmed(text, begin, text.size(), &out);
  return out;
}

const SentenceSplitter& DefaultSentenceSplitter() {
  static const RuleSentenceSplitter kSplitter;
  return kSplitter;
}

std::vector<Chunk> Segment(const Document& doc, SegmentStrategy strategy,
                           const SentenceSplitter* splitter) {
  std::vector<SpanRange> ranges;
  if (strategy == SegmentStrategy::kWhole) {
    ranges.push_back({0, unicode::CodepointCount(doc.text)});
  } else if (strategy == SegmentStrategy::kSentence) {
    ranges = (splitter ? *splitter : DefaultSentenceSplitter()).Split(doc.text);
  } else {
    const std::size_t n = WordsPerChunk(strategy);
    const std::vector<SpanRange> words = WhitespaceTokens(doc.text);
    for (std::size_t i = 0; i < words.size(); i += n) {
      const std::size_t last = std::min(words.size(), i + n) - 1;
      ranges.push_back({words[i].start, words[last].end});
    }
  }

  unicode::OffsetMap map(doc.text);
  std::vector<Chunk> chunks;
  chunks.reserve(ranges.size());
  for (const SpanRange& r : ranges) {
    if (r.empty()) continue;
    Chunk chunk;
    chunk.doc_id = doc.id;
    chunk.index = chunks.size();
    chunk.start_offset = r.start;
    const std::size_t b = map.ToByte(r.start);
    chunk.text = doc.text.substr(b, map.ToByte(r.end) - b);
    chunk.strategy = strategy;
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

}  // namespace sdtk::detect
