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

#include "detect/bio.h"

#include <algorithm>

#include "core/errors.h"
#include "core/unicode.h"

namespace sdtk::detect {

std::string BioLabelName(const BioLabel& label) {
  switch (label.tag) {
    case BioTag::kO: return "O";
    case BioTag::kB: return "B-" + std::string(CategoryName(label.category));
    case BioTag::kI: return "I-" + std::string(CategoryName(label.category));
  }
  return "O";
}

BioLabel ParseBioLabel(std::string_view name) {
  if (name == "O" || name == "o") return BioLabel::O();
  if (name.size() < 3 || name[1] != '-' ||
      (name[0] != 'B' && name[0] != 'I' && name[0] != 'b' && name[0] != 'i')) {
    throw ParseError("malformed BIO label '" + std::string(name) + "'");
  }
  const Category c = ParseCategoryOrThrow(name.substr(2));
  return (name[0] == 'B' || name[0] == 'b') ? BioLabel::B(c) : BioLabel::I(c);
}

std::vector<BioLabel> EncodeBio(std::span<const SpanRange> tokens,
                                std::span<const LabeledRange> spans) {
  std::vector<LabeledRange> sorted(spans.begin(), spans.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const LabeledRange& a, const LabeledRange& b) {
              return a.range < b.range;
            });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (OverlapLen(sorted[i - 1].range, sorted[i].range) > 0) {
      throw InputError("cannot BIO-encode overlapping spans [" +
                       std::to_string(sorted[i - 1].range.start) + "," +
                       std::to_string(sorted[i - 1].range.end) + ") and [" +
                       std::to_string(sorted[i].range.start) + "," +
                       std::to_string(sorted[i].range.end) + ")");
    }
  }

  std::vector<BioLabel> labels(tokens.size());
  std::vector<bool> assigned(tokens.size(), false);
  for (const LabeledRange& span : sorted) {
    bool started = false;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (tokens[t].start >= span.range.end) break;
      if (assigned[t] || OverlapLen(tokens[t], span.range) == 0) continue;
      labels[t] = started ? BioLabel::I(span.category) : BioLabel::B(span.category);
      assigned[t] = true;
      started = true;
    }
  }
  return labels;
}

std::vector<LabeledRange> DecodeBioRanges(std::span<const BioLabel> labels,
                                          std::span<const SpanRange> tokens) {
  if (labels.size() != tokens.size()) {
    throw InputError("label count " + std::to_string(labels.size()) +
                     " does not match token count " +
                     std::to_string(tokens.size()));
  }
  std::vector<LabeledRange> out;
  bool open = false;
  for (std::size_t t = 0; t < labels.size(); ++t) {
    const BioLabel& label = labels[t];
    if (label.is_outside()) {
      open = false;
      continue;
    }
    const bool continues = open && label.tag == BioTag::kI &&
                           out.back().category == label.category;
    if (continues) {
      out.back().range.end = tokens[t].end;
    } else {
      out.push_back({tokens[t], label.category});
      open = true;
    }
  }
  return out;
}

std::vector<DisclosureSpan> DecodeBio(std::span<const BioLabel> labels,
                                      std::span<const SpanRange> tokens,
                                      const Chunk& chunk) {
  std::vector<DisclosureSpan> out;
  for (const LabeledRange& r : DecodeBioRanges(labels, tokens)) {
    DisclosureSpan span = MakeSpan(chunk.doc_id, chunk.text, r.range.start,
                                   r.range.end, r.category);
    span.start += chunk.start_offset;
    span.end += chunk.start_offset;
    out.push_back(std::move(span));
  }
  return out;
}

}  // namespace sdtk::detect
