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

#ifndef SDTK_ABSTRACT_VALIDATE_H_
#define SDTK_ABSTRACT_VALIDATE_H_

#include <string>
#include <string_view>
#include <vector>

#include "core/span.h"
#include "core/types.h"

namespace sdtk::abstract {

// Checks one candidate replacement of `span` (code points within
// `sentence`):
//   fits_context  the edit leaves everything outside the span unchanged and
//                 the candidate has no line break;
//   non_trivial   the candidate differs from the span text ignoring case and
//                 whitespace;
//   non_empty     the candidate has a non-space character.
// length_ratio is candidate words over span words; overlong flags a ratio
// above 4. Throws RangeError when the span is not inside the sentence.
ValidationReport ValidateAbstraction(std::string_view sentence, SpanRange span,
                                     std::string_view candidate);

// Sets near_duplicate on every report whose candidate equals another one in
// the set after lowercasing and whitespace collapsing.
void FlagNearDuplicates(const std::vector<std::string>& candidates,
                        std::vector<ValidationReport>* reports);

// Lowercased, whitespace-collapsed form used for the comparisons above.
std::string NormalizeForComparison(std::string_view text);

}  // namespace sdtk::abstract

#endif  // SDTK_ABSTRACT_VALIDATE_H_
