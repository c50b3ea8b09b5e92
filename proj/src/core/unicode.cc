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

#include "core/unicode.h"

#include <algorithm>

#include "core/errors.h"

namespace sdtk::unicode {
namespace {

// Returns the sequence length of a UTF-8 lead byte, or 0 if invalid.
int SequenceLength(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 0;
}

char32_t DecodeAt(std::string_view s, std::size_t* pos) {
  const auto lead = static_cast<unsigned char>(s[*pos]);
  const int len = SequenceLength(lead);
  if (len == 0 || *pos + len > s.size()) {
    throw ParseError("invalid UTF-8 at byte " + std::to_string(*pos));
  }
  char32_t cp = len == 1 ? lead : lead & (0xFF >> (len + 1));
  for (int i = 1; i < len; ++i) {
    const auto c = static_cast<unsigned char>(s[*pos + i]);
    if ((c >> 6) != 0x2) {
      throw ParseError("invalid UTF-8 continuation at byte " +
                       std::to_string(*pos + i));
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  *pos += len;
  return cp;
}

}  // namespace

std::u32string Decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t pos = 0;
  while (pos < utf8.size()) out.push_back(DecodeAt(utf8, &pos));
  return out;
}

void AppendUtf8(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) AppendUtf8(cp, &out);
  return out;
}

std::size_t CodepointCount(std::string_view utf8) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < utf8.size()) {
    DecodeAt(utf8, &pos);
    ++count;
  }
  return count;
}

OffsetMap::OffsetMap(std::string_view utf8) {
  byte_offsets_.reserve(utf8.size() + 1);
  std::size_t pos = 0;
  while (pos < utf8.size()) {
    byte_offsets_.push_back(pos);
    DecodeAt(utf8, &pos);
  }
  byte_offsets_.push_back(utf8.size());
}

std::size_t OffsetMap::ToByte(std::size_t cp) const {
  if (cp >= byte_offsets_.size()) {
    throw RangeError("code point offset " + std::to_string(cp) +
                     " beyond text length " + std::to_string(size()));
  }
  return byte_offsets_[cp];
}

std::size_t OffsetMap::ToCodepoint(std::size_t byte) const {
  auto it = std::lower_bound(byte_offsets_.begin(), byte_offsets_.end(), byte);
  if (it == byte_offsets_.end() || *it != byte) {
    throw RangeError("byte offset " + std::to_string(byte) +
                     " is not on a code point boundary");
  }
  return static_cast<std::size_t>(it - byte_offsets_.begin());
}

std::string Substr(std::string_view utf8, std::size_t start, std::size_t end) {
  OffsetMap map(utf8);
  if (start > end || end > map.size()) {
    throw RangeError("range [" + std::to_string(start) + "," +
                     std::to_string(end) + ") outside text of length " +
                     std::to_string(map.size()));
  }
  const std::size_t b = map.ToByte(start);
  return std::string(utf8.substr(b, map.ToByte(end) - b));
}

bool IsSpace(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool IsWordChar(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
           (cp >= U'0' && cp <= U'9') || cp == U'_';
  }
  // Non-ASCII letters are not classified further; treat everything outside
  // the general punctuation and symbol blocks as word material.
  if (IsSpace(cp)) return false;
  if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp >= 0xFF00 && cp <= 0xFF0F) return false;
  if (cp >= 0x1F000) return false;  // emoji and pictographs
  if (cp >= 0x2190 && cp <= 0x2BFF) return false;  // arrows, symbols
  if (cp == 0xA1 || cp == 0xAB || cp == 0xBB || cp == 0xBF) return false;
  return true;
}

char32_t ToLowerAscii(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
}

std::string ToLower(std::string_view utf8) {
  std::string out(utf8);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
  });
  return out;
}

}  // namespace sdtk::unicode
