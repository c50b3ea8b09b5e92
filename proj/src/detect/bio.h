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

#ifndef SDTK_DETECT_BIO_H_
#define SDTK_DETECT_BIO_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/category.h"
#include "core/span.h"
#include "core/types.h"
#include "detect/segment.h"

namespace sdtk::detect {

enum class BioTag { kO, kB, kI };

struct BioLabel {
  BioTag tag = BioTag::kO;
  Category category = Category::kLocation;  // ignored for kO

  static BioLabel O() { return {}; }
  static BioLabel B(Category c) { return {BioTag::kB, c}; }
  static BioLabel I(Category c) { return {BioTag::kI, c}; }

  bool is_outside() const { return tag == BioTag::kO; }

  friend bool operator==(const BioLabel& a, const BioLabel& b) {
    return a.tag == b.tag && (a.tag == BioTag::kO || a.category == b.category);
  }
};

// "O", "B-Location", "I-Age_Gender".
std::string BioLabelName(const BioLabel& label);
// Throws ParseError on malformed labels or unknown categories.
BioLabel ParseBioLabel(std::string_view name);

struct LabeledRange {
  SpanRange range;
  Category category = Category::kLocation;

  friend bool operator==(const LabeledRange&, const LabeledRange&) = default;
};

// Labels `tokens` (ordered, non-overlapping) from `spans`. The first token
// intersecting a span is B-c, later intersecting tokens are I-c, all others O.
// A token intersecting two spans keeps the label of the earlier one. Throws
// InputError if spans overlap each other.
std::vector<BioLabel> EncodeBio(std::span<const SpanRange> tokens,
                                std::span<const LabeledRange> spans);

// Maximal runs B-c (I-c)* become ranges from the first token's start to the
// last token's end. An I-c that does not continue a run of category c starts
// a new range. Throws InputError on a length mismatch.
std::vector<LabeledRange> DecodeBioRanges(std::span<const BioLabel> labels,
                                          std::span<const SpanRange> tokens);

// DecodeBioRanges over chunk-relative tokens, lifted to document offsets.
std::vector<DisclosureSpan> DecodeBio(std::span<const BioLabel> labels,
                                      std::span<const SpanRange> tokens,
                                      const Chunk& chunk);

}  // namespace sdtk::detect

#endif  // SDTK_DETECT_BIO_H_
