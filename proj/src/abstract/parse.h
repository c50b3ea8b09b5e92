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

#ifndef SDTK_ABSTRACT_PARSE_H_
#define SDTK_ABSTRACT_PARSE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/records.h"

namespace sdtk::abstract {

struct JsonMatch {
  Json object;
  std::size_t begin = 0;  // byte offsets of the braces in the input
  std::size_t end = 0;    // one past the closing brace
};

// Every balanced {...} in `raw` that parses as a JSON object, in order.
// String literals are respected when matching braces.
std::vector<JsonMatch> FindJsonObjects(std::string_view raw);
std::vector<Json> ExtractJsonObjects(std::string_view raw);

// Prose preceding a JSON answer, without code fences, trailing answer labels
// or a leading "Rationale:". nullopt when nothing is left.
std::optional<std::string> CleanRationale(std::string_view before);

struct ParsedCandidates {
  std::vector<std::string> candidates;
  std::optional<std::string> rationale;  // prose before the JSON object
};

// Finds the JSON object with keys "span 1" .. "span <expect>" and nothing
// else, tolerating surrounding prose and code fences. Values are trimmed.
// Empty values are returned as is, for validation to reject. Throws
// ParseError when there is no such object or a value is not a string.
ParsedCandidates ParseCandidates(std::string_view raw, int expect);

struct ParsedCandidate {
  std::string candidate;
  std::optional<std::string> rationale;
};

// A single generalized span, as answered to the one-span and iterative
// prompts. Accepted shapes, in order of preference:
//   a JSON object with one of the keys "span", "span 1", "Generalized Span";
//   a line "Generalized Span: ..." (prose before it is the rationale);
//   a single non-empty line.
// Surrounding quotes are removed. Throws ParseError otherwise.
ParsedCandidate ParseSingleCandidate(std::string_view raw);

// Collapses whitespace and trims.
std::string CollapseWhitespace(std::string_view text);

}  // namespace sdtk::abstract

#endif  // SDTK_ABSTRACT_PARSE_H_
