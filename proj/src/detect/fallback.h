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

#ifndef SDTK_DETECT_FALLBACK_H_
#define SDTK_DETECT_FALLBACK_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/types.h"
#include "detect/plugins.h"
#include "detect/regex_rules.h"
#include "detect/segment.h"

// Name and Contact are not produced by the tagger. They come from pattern
// rules or a person recognizer, kept only where the sentence gate says the
// surrounding sentence is a self-disclosure.
namespace sdtk::detect {

// Contact spans for every rule match whose containing sentence(s) pass the
// gate, with overlapping matches merged. `splitter` defaults to DefaultSentenceSplitter().
std::vector<DisclosureSpan> DetectContact(
    const std::string& doc_id, std::string_view text, const RegexRuleSet& rules,
    const SentenceGate& gate, const SentenceSplitter* splitter = nullptr);

// Name spans from `recognizer`, gated the same way. A null recognizer is a
// configuration error.
std::vector<DisclosureSpan> DetectName(const std::string& doc_id,
                                       std::string_view text,
                                       const PersonRecognizer* recognizer,
                                       const SentenceGate& gate,
                                       const SentenceSplitter* splitter = nullptr);

// Smallest range covering every sentence that `range` touches, or `range`
// itself when it touches none.
SpanRange EnclosingSentences(std::span<const SpanRange> sentences,
                             SpanRange range);

}  // namespace sdtk::detect

#endif  // SDTK_DETECT_FALLBACK_H_
