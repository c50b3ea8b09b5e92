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

#ifndef SDTK_DETECT_REGEX_RULES_H_
#define SDTK_DETECT_REGEX_RULES_H_

#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "core/category.h"
#include "core/records.h"
#include "core/span.h"

namespace sdtk::detect {

struct RuleMatch {
  SpanRange range;  // code points
  std::string rule_id;
  std::optional<Category> category;
};

// A versioned list of regular-expression rules loaded from a JSON data file:
//   {"version": "3", "rules": [{"id": "...", "pattern": "...",
//     "icase": true, "group": 0, "category": "Contact"}]}
// Patterns use ECMAScript syntax and match against UTF-8 bytes; results are
// reported in code points.
class RegexRuleSet {
 public:
  static RegexRuleSet FromJson(const Json& doc);
  // `path` empty selects the embedded asset `default_asset`.
  static RegexRuleSet Load(const std::string& path, std::string_view default_asset);

  std::vector<RuleMatch> FindAll(std::string_view text) const;

  const std::string& version() const { return version_; }
  std::size_t size() const { return rules_.size(); }

 private:
  struct Rule {
    std::string id;
    std::regex regex;
    int group = 0;
    std::optional<Category> category;
  };

  std::string version_;
  std::vector<Rule> rules_;
};

}  // namespace sdtk::detect

#endif  // SDTK_DETECT_REGEX_RULES_H_
