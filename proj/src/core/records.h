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

#ifndef SDTK_CORE_RECORDS_H_
#define SDTK_CORE_RECORDS_H_

#include "core/types.h"
#include "json.hpp"

// JSON record schemas shared by the CLI, the service and JSONL files.
namespace sdtk {

using Json = nlohmann::json;

Json ToJson(const Document& doc);
Json ToJson(const DisclosureSpan& span);
Json ToJson(const ValidationReport& report);
Json ToJson(const AbstractionSet& set);
// {"doc_id", "span_start", "span_end", "level", "rationale"}
Json ToJson(const ImportanceRating& rating);

// The readers throw ParseError naming the offending field.
Document DocumentFromJson(const Json& j);
DisclosureSpan SpanFromJson(const Json& j);
ImportanceRating RatingFromJson(const Json& j);

// Field accessors with uniform error messages.
const Json& RequireField(const Json& j, const char* key);
std::string RequireString(const Json& j, const char* key);
std::size_t RequireIndex(const Json& j, const char* key);
std::optional<std::string> OptionalString(const Json& j, const char* key);

}  // namespace sdtk

#endif  // SDTK_CORE_RECORDS_H_
