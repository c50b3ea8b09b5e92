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

#ifndef SDTK_CORE_TOKENIZE_H_
#define SDTK_CORE_TOKENIZE_H_

#include <string>
#include <string_view>
#include <vector>

#include "core/span.h"

namespace sdtk {

// Default shared tokenization: runs of word characters (with internal
// apostrophes, hyphens and periods kept, as in "I'm", "23-year-old", "a.m")
// form one token; every other non-space code point is a token of its own.
// Returned ranges are code point offsets.
std::vector<SpanRange> TokenizeWords(std::string_view utf8);

// Maximal runs of non-whitespace, as code point ranges.
std::vector<SpanRange> WhitespaceTokens(std::string_view utf8);

// Maximal runs of non-whitespace, as strings.
std::vector<std::string> SplitWhitespace(std::string_view utf8);

}  // namespace sdtk

#endif  // SDTK_CORE_TOKENIZE_H_
