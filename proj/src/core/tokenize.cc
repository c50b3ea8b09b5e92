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

#include "core/tokenize.h"

#include "core/unicode.h"

namespace sdtk {
namespace {

bool IsJoiner(char32_t cp) {
  return cp == U'\'' || cp == U'-' || cp == U'.' || cp == 0x2019;
}

}  // namespace

std::vector<SpanRange> TokenizeWords(std::string_view utf8) {
  const std::u32string text = unicode::Decode(utf8);
  std::vector<SpanRange> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (unicode::IsSpace(text[i])) {
      ++i;
      continue;
    }
    if (!unicode::IsWordChar(text[i])) {
      tokens.push_back({i, i + 1});
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size()) {
      if (unicode::IsWordChar(text[j])) {
        ++j;
      } else if (IsJoiner(text[j]) && j + 1 < text.size() &&
                 unicode::IsWordChar(text[j + 1])) {
        j += 2;
      } else {
        break;
      }
    }
    tokens.push_back({i, j});
    i = j;
  }
  return tokens;
}

std::vector<SpanRange> WhitespaceTokens(std::string_view utf8) {
  const std::u32string text = unicode::Decode(utf8);
  std::vector<SpanRange> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (unicode::IsSpace(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !unicode::IsSpace(text[j])) ++j;
    tokens.push_back({i, j});
    i = j;
  }
  return tokens;
}

std::vector<std::string> SplitWhitespace(std::string_view utf8) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  while (i < utf8.size()) {
    while (i < utf8.size() && is_space(utf8[i])) ++i;
    std::size_t j = i;
    while (j < utf8.size() && !is_space(utf8[j])) ++j;
    if (j > i) out.emplace_back(utf8.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace sdtk
