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

#ifndef SDTK_ABSTRACT_PROMPT_H_
#define SDTK_ABSTRACT_PROMPT_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sdtk::abstract {

using Bindings = std::map<std::string, std::string>;

// Template ids shipped under assets/prompts/<id>.txt.
const std::vector<std::string>& TemplateIds();

// Raw template text. Throws ConfigError for unknown ids.
std::string_view TemplateText(std::string_view id);

// Named placeholders in order of first appearance.
std::vector<std::string> Placeholders(std::string_view tmpl);

// str.format-style rendering: "{name}" is replaced by its binding, "{{" and
// "}}" produce literal braces. Throws InputError naming the first placeholder
// without a binding, and ParseError on unbalanced braces. Unused bindings are
// ignored.
std::string Render(std::string_view tmpl, const Bindings& bindings);

// Render(TemplateText(id), bindings).
std::string BuildPrompt(std::string_view id, const Bindings& bindings);

// Prior candidates as they appear after "Example Generalizations:",
// e.g. "\"a\", \"b\"", or "None" when there are none yet.
std::string FormatExamples(const std::vector<std::string>& examples);

}  // namespace sdtk::abstract

#endif  // SDTK_ABSTRACT_PROMPT_H_
