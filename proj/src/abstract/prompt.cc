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

#include "abstract/prompt.h"

#include <algorithm>

#include "core/assets.h"
#include "core/errors.h"

namespace sdtk::abstract {
namespace {

// Walks `tmpl`, calling on_text for literal pieces and on_field for every
// placeholder name.
template <typename Text, typename Field>
void Scan(std::string_view tmpl, Text&& on_text, Field&& on_field) {
  std::size_t i = 0;
  while (i < tmpl.size()) {
    const char c = tmpl[i];
    if (c == '{') {
      if (i + 1 < tmpl.size() && tmpl[i + 1] == '{') {
        on_text(std::string_view("{"));
        i += 2;
        continue;
      }
      const std::size_t close = tmpl.find('}', i + 1);
      if (close == std::string_view::npos) {
        throw ParseError("template has an unclosed '{' at byte " + std::to_string(i));
      }
      const std::string_view name = tmpl.substr(i + 1, close - i - 1);
      if (name.empty() || name.find('{') != std::string_view::npos) {
        throw ParseError("template has a malformed field at byte " + std::to_string(i));
      }
      on_field(std::string(name));
      i = close + 1;
    } else if (c == '}') {
      if (i + 1 < tmpl.size() && tmpl[i + 1] == '}') {
        on_text(std::string_view("}"));
        i += 2;
        continue;
      }
      throw ParseError("template has a single '}' at byte " + std::to_string(i));
    } else {
      const std::size_t next = tmpl.find_first_of("{}", i);
      const std::size_t end = next == std::string_view::npos ? tmpl.size() : next;
      on_text(tmpl.substr(i, end - i));
      i = end;
    }
  }
}

}  // namespace

const std::vector<std::string>& TemplateIds() {
  static const std::vector<std::string> kIds = [] {
    std::vector<std::string> ids;
    const std::string prefix = "prompts/";
    for (const std::string& name : ListAssets()) {
      if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() + 4) {
        ids.push_back(name.substr(prefix.size(), name.size() - prefix.size() - 4));
      }
    }
    return ids;
  }();
  return kIds;
}

std::string_view TemplateText(std::string_view id) {
  const std::string name = "prompts/" + std::string(id) + ".txt";
  auto text = FindAsset(name);
  if (!text) throw ConfigError("unknown prompt template '" + std::string(id) + "'");
  return *text;
}

std::vector<std::string> Placeholders(std::string_view tmpl) {
  std::vector<std::string> names;
  Scan(tmpl, [](std::string_view) {},
       [&](const std::string& name) {
         if (std::find(names.begin(), names.end(), name) == names.end()) {
           names.push_back(name);
         }
       });
  return names;
}

std::string Render(std::string_view tmpl, const Bindings& bindings) {
  std::string out;
  out.reserve(tmpl.size());
  Scan(tmpl, [&](std::string_view text) { out += text; },
       [&](const std::string& name) {
         auto it = bindings.find(name);
         if (it == bindings.end()) {
           throw InputError("missing binding for placeholder '" + name + "'");
         }
         out += it->second;
       });
  return out;
}

std::string BuildPrompt(std::string_view id, const Bindings& bindings) {
  return Render(TemplateText(id), bindings);
}

std::string FormatExamples(const std::vector<std::string>& examples) {
  if (examples.empty()) return "None";
  std::string out;
  for (const std::string& e : examples) {
    if (!out.empty()) out += ", ";
    out += "\"" + e + "\"";
  }
  return out;
}

}  // namespace sdtk::abstract
