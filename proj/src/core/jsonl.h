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

#ifndef SDTK_CORE_JSONL_H_
#define SDTK_CORE_JSONL_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "core/records.h"

namespace sdtk {

std::string ReadFile(const std::string& path);

// Writes via a sibling temp file and rename(2), so readers never observe a
// truncated file.
void WriteFileAtomic(const std::string& path, std::string_view content);

// Blank lines are skipped. Throws ParseError carrying the 1-based line number.
std::vector<Json> ParseJsonl(std::string_view content);
std::vector<Json> ReadJsonl(const std::string& path);

std::string ToJsonl(const std::vector<Json>& records);
void WriteJsonlAtomic(const std::string& path, const std::vector<Json>& records);

// Typed readers. Each record error is reported with its line number.
std::vector<Document> ReadDocuments(const std::string& path);
std::vector<DisclosureSpan> ReadSpans(const std::string& path);

// Applies `fn` to every record, rethrowing failures as ParseError with the
// line number attached.
template <typename T>
std::vector<T> MapRecords(const std::vector<Json>& records,
                          const std::function<T(const Json&)>& fn);

}  // namespace sdtk

#endif  // SDTK_CORE_JSONL_H_
