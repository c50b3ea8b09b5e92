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

#include "abstract/parse.h"

#include <cctype>

#include "core/errors.h"

namespace sdtk::abstract {
namespace {

std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// Removes one layer of matching quotes (straight or curly).
std::string Unquote(std::string s) {
  s = Trim(s);
  const std::pair<std::string_view, std::string_view> pairs[] = {
      {"\"", "\""}, {"'", "'"}, {"\xE2\x80\x9C", "\xE2\x80\x9D"}};
  for (const auto& [open, close] : pairs) {
    if (s.size() >= open.size() + close.size() && StartsWith(s, open) &&
        s.compare(s.size() - close.size(), close.size(), close) == 0) {
      return Trim(s.substr(open.size(), s.size() - open.size() - close.size()));
    }
  }
  return s;
}

}  // namespace

std::optional<std::string> CleanRationale(std::string_view before) {
  std::string text = Trim(before);
  for (std::string_view fence : {"```json", "```"}) {
    if (text.size() >= fence.size() &&
        text.compare(text.size() - fence.size(), fence.size(), fence) == 0) {
      text = Trim(text.substr(0, text.size() - fence.size()));
      break;
    }
  }
  for (std::string_view label :
       {"Generalized Spans:", "Generalized Span:", "Generalized Alternatives:"}) {
    if (text.size() >= label.size() &&
        text.compare(text.size() - label.size(), label.size(), label) == 0) {
      text = Trim(text.substr(0, text.size() - label.size()));
    }
  }
  if (StartsWith(text, "Rationale:")) text = Trim(text.substr(10));
  if (text.empty()) return std::nullopt;
  return text;
}

std::vector<JsonMatch> FindJsonObjects(std::string_view raw) {
  std::vector<JsonMatch> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != '{') continue;
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t j = i; j < raw.size(); ++j) {
      const char c = raw[j];
      if (in_string) {
        if (escaped) {
          escaped = false;
        } else if (c == '\\') {
          escaped = true;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}' && --depth == 0) {
        try {
          Json j_obj = Json::parse(raw.substr(i, j - i + 1));
          if (j_obj.is_object()) {
            out.push_back({std::move(j_obj), i, j + 1});
            i = j;
          }
        } catch (const Json::exception&) {
        }
        break;
      }
    }
  }
  return out;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
    } else {
      if (space) out.push_back(' ');
      space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Json> ExtractJsonObjects(std::string_view raw) {
  std::vector<Json> out;
  for (JsonMatch& l : FindJsonObjects(raw)) out.push_back(std::move(l.object));
  return out;
}

ParsedCandidates ParseCandidates(std::string_view raw, int expect) {
  if (expect <= 0) throw InputError("expected candidate count must be positive");
  const std::vector<JsonMatch> objects = FindJsonObjects(raw);
  if (objects.empty()) throw ParseError("no JSON object in model output");
  std::string problem = "no object with keys \"span 1\"..\"span " +
                        std::to_string(expect) + "\"";
  for (auto it = objects.rbegin(); it != objects.rend(); ++it) {
    const Json& obj = it->object;
    bool has_span_key = false;
    for (const auto& [k, v] : obj.items()) has_span_key |= StartsWith(k, "span ");
    if (!has_span_key) continue;
    if (obj.size() != static_cast<std::size_t>(expect)) {
      problem = "expected " + std::to_string(expect) + " candidates, got " +
                std::to_string(obj.size());
      continue;
    }
    ParsedCandidates parsed;
    bool ok = true;
    for (int k = 1; k <= expect && ok; ++k) {
      auto v = obj.find("span " + std::to_string(k));
      if (v == obj.end() || !v->is_string()) {
        problem = "missing string value for \"span " + std::to_string(k) + "\"";
        ok = false;
        break;
      }
      parsed.candidates.push_back(Trim(v->get<std::string>()));
    }
    if (!ok) continue;
    parsed.rationale = CleanRationale(raw.substr(0, it->begin));
    return parsed;
  }
  throw ParseError(problem);
}

ParsedCandidate ParseSingleCandidate(std::string_view raw) {
  for (const JsonMatch& l : FindJsonObjects(raw)) {
    for (const char* key : {"span", "span 1", "Generalized Span", "generalized span"}) {
      auto v = l.object.find(key);
      if (v != l.object.end() && v->is_string()) {
        std::string value = Unquote(v->get<std::string>());
        if (value.empty()) throw ParseError("empty candidate");
        return {value, CleanRationale(raw.substr(0, l.begin))};
      }
    }
  }

  const std::string text(raw);
  for (std::string_view label : {"Generalized Span:", "Generalized span:",
                                 "Generalized Alternative:"}) {
    const std::size_t pos = text.rfind(label);
    if (pos == std::string::npos) continue;
    std::string rest = text.substr(pos + label.size());
    const std::size_t nl = Trim(rest).find('\n');
    rest = Trim(rest);
    if (nl != std::string::npos) rest = rest.substr(0, nl);
    std::string value = Unquote(rest);
    if (value.empty()) break;
    return {value, CleanRationale(std::string_view(text).substr(0, pos))};
  }

  const std::string trimmed = Trim(raw);
  if (!trimmed.empty() && trimmed.find('\n') == std::string::npos) {
    std::string value = Unquote(trimmed);
    if (!value.empty()) return {value, std::nullopt};
  }
  throw ParseError("could not find a generalized span in model output");
}

}  // namespace sdtk::abstract
