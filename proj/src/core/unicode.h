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

#ifndef SDTK_CORE_UNICODE_H_
#define SDTK_CORE_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// All offsets exchanged by the toolkit are Unicode code point indices into
// UTF-8 text. These helpers convert between the two views.
namespace sdtk::unicode {

// Throws ParseError on malformed UTF-8.
std::u32string Decode(std::string_view utf8);
std::string Encode(std::u32string_view text);
void AppendUtf8(char32_t cp, std::string* out);

std::size_t CodepointCount(std::string_view utf8);

// Maps code point offsets to byte offsets in one pass over the text.
class OffsetMap {
 public:
  explicit OffsetMap(std::string_view utf8);

  std::size_t size() const { return byte_offsets_.size() - 1; }
  std::size_t ToByte(std::size_t cp) const;
  // Byte offset must fall on a code point boundary.
  std::size_t ToCodepoint(std::size_t byte) const;

 private:
  std::vector<std::size_t> byte_offsets_;  // size() + 1 entries
};

// Code point substring [start, end). Throws RangeError when out of bounds.
std::string Substr(std::string_view utf8, std::size_t start, std::size_t end);

bool IsSpace(char32_t cp);
bool IsWordChar(char32_t cp);
char32_t ToLowerAscii(char32_t cp);
std::string ToLower(std::string_view utf8);

}  // namespace sdtk::unicode

#endif  // SDTK_CORE_UNICODE_H_
