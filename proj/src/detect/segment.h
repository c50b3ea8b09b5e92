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

#ifndef SDTK_DETECT_SEGMENT_H_
#define SDTK_DETECT_SEGMENT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "core/span.h"
#include "core/types.h"

namespace sdtk::detect {

enum class SegmentStrategy { kWhole, kWords256, kWords128, kWords64, kSentence };

std::string_view SegmentStrategyName(SegmentStrategy strategy);
SegmentStrategy ParseSegmentStrategy(std::string_view name);

// A contiguous piece of a document handed to a tagger. Chunks never overlap
// and appear in document order. Whitespace between chunks belongs to no
// chunk; except for kWhole, chunks start and end on non-whitespace.
struct Chunk {
  std::string doc_id;
  std::size_t index = 0;
  std::size_t start_offset = 0;  // code points into the document
  std::string text;
  SegmentStrategy strategy = SegmentStrategy::kSentence;

  std::string id() const { return doc_id + "#" + std::to_string(index); }
};

class SentenceSplitter {
 public:
  virtual ~SentenceSplitter() = default;
  // Returns ordered, non-overlapping code point ranges, each trimmed of
  // surrounding whitespace, covering every non-whitespace character.
  virtual std::vector<SpanRange> Split(std::string_view text) const = 0;
};

// Punctuation-driven splitter: a sentence ends after a run of . ! ? or …
// (plus closing quotes and brackets) followed by whitespace, and at every
// line break. Common abbreviations ("Mr.", "e.g.") do not end a sentence.
class RuleSentenceSplitter : public SentenceSplitter {
 public:
  std::vector<SpanRange> Split(std::string_view text) const override;
};

const SentenceSplitter& DefaultSentenceSplitter();

// Splits `doc` into chunks. `splitter` is only consulted for kSentence and
// defaults to DefaultSentenceSplitter().
std::vector<Chunk> Segment(const Document& doc, SegmentStrategy strategy,
                           const SentenceSplitter* splitter = nullptr);

}  // namespace sdtk::detect

#endif  // SDTK_DETECT_SEGMENT_H_
