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

#ifndef SDTK_LLM_CACHE_H_
#define SDTK_LLM_CACHE_H_

#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "llm/provider.h"

namespace sdtk::llm {

// Hex SHA-256 over (model_id, prompt, temperature, max_tokens), plus the
// sample index when it is non-zero.
std::string CacheKey(const CompletionRequest& request);

// Content-addressed response cache. Entries are never overwritten once
// present. With a directory, each entry is also a file written by atomic
// rename, so concurrent readers see either nothing or the full entry.
class ResponseCache {
 public:
  explicit ResponseCache(std::string dir = {}) : dir_(std::move(dir)) {}

  std::optional<std::string> Get(const std::string& key) const;
  void Put(const std::string& key, const std::string& value,
           const std::string& template_id);

  std::size_t memory_size() const;

 private:
  std::string PathFor(const std::string& key) const;

  std::string dir_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, std::string> memory_;
};

}  // namespace sdtk::llm

#endif  // SDTK_LLM_CACHE_H_
