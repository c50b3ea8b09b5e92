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

#include "abstract/validate.h"

#include "abstract/parse.h"
#include "core/tokenize.h"
#include "core/unicode.h"

namespace sdtk::abstract {

std::string NormalizeForComparison(std::string_view text) {
  return CollapseWhitespace(unicode::ToLower(text));
}

ValidationReport ValidateAbstraction(std::string_view sentence, SpanRange span,
                                     std::string_view candidate) {
  const EditResult edit = ApplyEdit(sentence, span.start, span.end, candidate);
  const std::u32string before = unicode::Decode(sentence);
  const std::u32string after = unicode::Decode(edit.new_text);
  const std::size_t tail = before.size() - span.end;

  ValidationReport report;
  const bool prefix_kept =
      after.compare(0, span.start, before, 0, span.start) == 0;
  const bool suffix_kept =
      after.size() >= edit.new_end + tail &&
      after.compare(edit.new_end, std::u32string::npos, before, span.end,
                    std::u32string::npos) == 0;
  const bool single_line = candidate.find_first_of("\r\n") == std::string_view::npos;
  report.fits_context = prefix_kept && suffix_kept && single_line;

  const std::string original = unicode::Substr(sentence, span.start, span.end);
  report.non_empty = !SplitWhitespace(candidate).empty();
  report.non_trivial =
      NormalizeForComparison(candidate) != NormalizeForComparison(original);

  const std::size_t span_words = SplitWhitespace(original).size();
  const std::size_t cand_words = SplitWhitespace(candidate).size();
  report.length_ratio = span_words == 0 ? 0.0 : double(cand_words) / span_words;
  report.overlong = report.length_ratio > 4.0;
  return report;
}

void FlagNearDuplicates(const std::vector<std::string>& candidates,
                        std::vector<ValidationReport>* reports) {
  for (std::size_t i = 0; i < candidates.size() && i < reports->size(); ++i) {
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (i != j && NormalizeForComparison(candidates[i]) ==
                        NormalizeForComparison(candidates[j])) {
        (*reports)[i].near_duplicate = true;
      }
    }
  }
}

}  // namespace sdtk::abstract
