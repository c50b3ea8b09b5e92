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

#include "core/span.h"

#include "core/errors.h"
#include "core/unicode.h"

namespace sdtk {

EditResult ApplyEdit(std::string_view text, std::size_t start, std::size_t end,
                     std::string_view replacement) {
  unicode::OffsetMap map(text);
  if (!(start < end && end <= map.size())) {
    throw RangeError("edit range [" + std::to_string(start) + "," +
                     std::to_string(end) + ") invalid for text of length " +
                     std::to_string(map.size()));
  }
  const std::size_t b_start = map.ToByte(start);
  const std::size_t b_end = map.ToByte(end);

  EditResult result;
  result.new_text.reserve(text.size() - (b_end - b_start) + replacement.size());
  result.new_text.append(text.substr(0, b_start));
  result.new_text.append(replacement);
  result.new_text.append(text.substr(b_end));
  result.new_end = start + unicode::CodepointCount(replacement);
  return result;
}

}  // namespace sdtk
