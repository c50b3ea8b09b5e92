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

#include "detect/regex_rules.h"

#include "core/assets.h"
#include "core/errors.h"
#include "core/jsonl.h"
#include "core/unicode.h"

namespace sdtk::detect {

RegexRuleSet RegexRuleSet::FromJson(const Json& doc) {
  RegexRuleSet set;
  set.version_ = RequireString(doc, "version");
  const Json& rules = RequireField(doc, "rules");
  if (!rules.is_array()) throw ParseError("'rules' must be an array");
  for (const Json& r : rules) {
    Rule rule;
    rule.id = RequireString(r, "id");
    const std::string pattern = RequireString(r, "pattern");
    auto flags = std::regex::ECMAScript | std::regex::optimize;
    if (r.value("icase", false)) flags |= std::regex::icase;
    try {
      rule.regex = std::regex(pattern, flags);
    } catch (const std::regex_error& e) {
      throw ParseError("rule " + rule.id + ": bad pattern: " + e.what());
    }
    rule.group = r.value("group", 0);
    if (auto c = OptionalString(r, "category")) {
      rule.category = ParseCategoryOrThrow(*c);
    }
    set.rules_.push_back(std::move(rule));
  }
  return set;
}

RegexRuleSet RegexRuleSet::Load(const std::string& path,
                                std::string_view default_asset) {
  const std::string content =
      path.empty() ? std::string(GetAsset(default_asset)) : ReadFile(path);
  try {
    return FromJson(Json::parse(content));
  } catch (const Json::exception& e) {
    throw ParseError((path.empty() ? std::string(default_asset) : path) + ": " +
                     e.what());
  }
}

std::vector<RuleMatch> RegexRuleSet::FindAll(std::string_view text) const {
  std::vector<RuleMatch> out;
  if (text.empty()) return out;
  unicode::OffsetMap map(text);
  const std::string owned(text);
  for (const Rule& rule : rules_) {
    for (auto it = std::sregex_iterator(owned.begin(), owned.end(), rule.regex);
         it != std::sregex_iterator(); ++it) {
      const std::smatch& m = *it;
      if (!m[rule.group].matched || m.length(rule.group) == 0) continue;
      const auto b_start = static_cast<std::size_t>(m.position(rule.group));
      const auto b_end = b_start + static_cast<std::size_t>(m.length(rule.group));
      // Byte-oriented regexes can stop inside a multi-byte sequence; widen to
      // the enclosing code points.
      std::size_t s = b_start;
      while (s > 0 && (static_cast<unsigned char>(owned[s]) & 0xC0) == 0x80) --s;
      std::size_t e = b_end;
      while (e < owned.size() &&
             (static_cast<unsigned char>(owned[e]) & 0xC0) == 0x80) {
        ++e;
      }
      out.push_back({{map.ToCodepoint(s), map.ToCodepoint(e)}, rule.id,
                     rule.category});
    }
  }
  return out;
}

}  // namespace sdtk::detect
