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

#ifndef SDTK_DETECT_MERGE_H_
#define SDTK_DETECT_MERGE_H_

#include <vector>

#include "core/types.h"

namespace sdtk::detect {

// Normalizes the spans of one document:
//  1. overlapping or touching spans of the same category are merged;
//  2. among spans of different categories that overlap, the longer one is
//     kept (ties: earlier start, then lower category).
// The result is sorted by start and non-overlapping. Throws InputError when
// the spans come from more than one document.
std::vector<DisclosureSpan> MergeSpans(std::vector<DisclosureSpan> spans);

}  // namespace sdtk::detect

#endif  // SDTK_DETECT_MERGE_H_
