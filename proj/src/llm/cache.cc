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

#include "llm/cache.h"

#include <openssl/evp.h>

#include <filesystem>
#include <mutex>

#include "core/errors.h"
#include "core/jsonl.h"
#include "fmt/format.h"

namespace sdtk::llm {

std::string CacheKey(const CompletionRequest& request) {
  Json fields = Json::array({request.params.model_id, request.rendered_prompt,
                             request.params.temperature,
                             request.params.max_tokens});
  if (request.sample_index != 0) fields.push_back(request.sample_index);
  const std::string payload = fields.dump();

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorKind::kInternal, "SHA-256 failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string ResponseCache::PathFor(const std::string& key) const {
  return dir_ + "/" + key.substr(0, 2) + "/" + key + ".json";
}

std::optional<std::string> ResponseCache::Get(const std::string& key) const {
  {
    std::shared_lock<std::shared_mutex> lock(mu_);
    auto it = memory_.find(key);
    if (it != memory_.end()) return it->second;
  }
  if (dir_.empty()) return std::nullopt;
  const std::string path = PathFor(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    const Json entry = Json::parse(ReadFile(path));
    std::string value = entry.at("response").get<std::string>();
    std::unique_lock<std::shared_mutex> lock(mu_);
    memory_.emplace(key, value);
    return value;
  } catch (const std::exception&) {
    // A damaged entry is treated as a miss.
    return std::nullopt;
  }
}

void ResponseCache::Put(const std::string& key, const std::string& value,
                        const std::string& template_id) {
  {
    std::unique_lock<std::shared_mutex> lock(mu_);
    if (!memory_.emplace(key, value).second) return;
  }
  if (dir_.empty()) return;
  const std::string path = PathFor(key);
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) return;
  WriteFileAtomic(path, Json{{"template_id", template_id}, {"response", value}}.dump());
}

std::size_t ResponseCache::memory_size() const {
  std::shared_lock<std::shared_mutex> lock(mu_);
  return memory_.size();
}

}  // namespace sdtk::llm
