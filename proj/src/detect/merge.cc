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

#include "detect/merge.h"

#include <algorithm>
#include <map>

#include "core/errors.h"
#include "core/unicode.h"

namespace sdtk::detect {
namespace {

// Extends `into` with `next`, which starts inside or right after it.
void Absorb(DisclosureSpan* into, const DisclosureSpan& next) {
  if (next.end <= into->end) return;
  const std::u32string tail = unicode::Decode(next.text);
  const std::size_t skip = into->end - next.start;
  into->text += unicode::Encode(std::u32string_view(tail).substr(skip));
  into->end = next.end;
}

}  // namespace

std::vector<DisclosureSpan> MergeSpans(std::vector<DisclosureSpan> spans) {
  if (spans.empty()) return spans;
  for (const DisclosureSpan& s : spans) {
    if (s.doc_id != spans.front().doc_id) {
      throw InputError("MergeSpans: spans from documents '" +
                       spans.front().doc_id + "' and '" + s.doc_id + "'");
    }
  }

  std::map<Category, std::vector<DisclosureSpan>> by_category;
  for (DisclosureSpan& s : spans) by_category[s.category].push_back(std::move(s));

  std::vector<DisclosureSpan> merged;
  for (auto& [category, group] : by_category) {
    SortSpans(&group);
    DisclosureSpan current = group.front();
    for (std::size_t i = 1; i < group.size(); ++i) {
      if (group[i].start <= current.end) {
        Absorb(&current, group[i]);
      } else {
        merged.push_back(std::move(current));
        current = group[i];
      }
    }
    merged.push_back(std::move(current));
  }

  std::sort(merged.begin(), merged.end(),
            [](const DisclosureSpan& a, const DisclosureSpan& b) {
              if (a.range().length() != b.range().length()) {
                return a.range().length() > b.range().length();
              }
              if (a.start != b.start) return a.start < b.start;
              return a.category < b.category;
            });
  std::vector<DisclosureSpan> kept;
  for (DisclosureSpan& s : merged) {
    const bool clash = std::any_of(
        kept.begin(), kept.end(),
        [&](const DisclosureSpan& k) { return OverlapLen(k.range(), s.range()) > 0; });
    if (!clash) kept.push_back(std::move(s));
  }
  SortSpans(&kept);
  return kept;
}

}  // namespace sdtk::detect
