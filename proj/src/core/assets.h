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

#ifndef SDTK_CORE_ASSETS_H_
#define SDTK_CORE_ASSETS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdtk {

// Read-only assets compiled into the library from the source tree's assets/
// directory. Names are relative paths such as "prompts/one_span.txt".
std::optional<std::string_view> FindAsset(std::string_view name);

// Throws ConfigError when the asset does not exist.
std::string_view GetAsset(std::string_view name);

std::vector<std::string> ListAssets();

}  // namespace sdtk

#endif  // SDTK_CORE_ASSETS_H_
