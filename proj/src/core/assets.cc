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

#include "core/assets.h"

#include <cstddef>

#include "core/errors.h"

namespace sdtk::assets_internal {
struct Entry {
  const char* name;
  const unsigned char* data;
  std::size_t size;
};
extern const Entry kEntries[];
extern const std::size_t kEntryCount;
}  // namespace sdtk::assets_internal

namespace sdtk {

std::optional<std::string_view> FindAsset(std::string_view name) {
  using assets_internal::kEntries;
  for (std::size_t i = 0; i < assets_internal::kEntryCount; ++i) {
    if (name == kEntries[i].name) {
      return std::string_view(reinterpret_cast<const char*>(kEntries[i].data),
                              kEntries[i].size);
    }
  }
  return std::nullopt;
}

std::string_view GetAsset(std::string_view name) {
  auto asset = FindAsset(name);
  if (!asset) throw ConfigError("no embedded asset named " + std::string(name));
  return *asset;
}

std::vector<std::string> ListAssets() {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < assets_internal::kEntryCount; ++i) {
    names.emplace_back(assets_internal::kEntries[i].name);
  }
  return names;
}

}  // namespace sdtk
