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

#ifndef SDTK_CORE_SPAN_H_
#define SDTK_CORE_SPAN_H_

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>

namespace sdtk {

// Half-open code point range [start, end).
struct SpanRange {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end > start ? end - start : 0; }
  bool empty() const { return end <= start; }

  friend bool operator==(const SpanRange&, const SpanRange&) = default;
  friend auto operator<=>(const SpanRange&, const SpanRange&) = default;
};

// |a ∩ b|; touching ranges share nothing.
inline std::size_t OverlapLen(SpanRange a, SpanRange b) {
  const std::size_t lo = std::max(a.start, b.start);
  const std::size_t hi = std::min(a.end, b.end);
  return hi > lo ? hi - lo : 0;
}

// True iff a ⊆ b or b ⊆ a. Equal endpoints count as containment.
inline bool ContainsRelation(SpanRange a, SpanRange b) {
  const bool a_in_b = b.start <= a.start && a.end <= b.end;
  const bool b_in_a = a.start <= b.start && b.end <= a.end;
  return a_in_b || b_in_a;
}

struct EditResult {
  std::string new_text;
  std::size_t new_end = 0;
};

// Replaces the code points [start, end) of `text`. Requires
// start < end <= length(text); throws RangeError otherwise.
EditResult ApplyEdit(std::string_view text, std::size_t start, std::size_t end,
                     std::string_view replacement);

}  // namespace sdtk

#endif  // SDTK_CORE_SPAN_H_
