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

#ifndef SDTK_LLM_CLIENT_H_
#define SDTK_LLM_CLIENT_H_

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <semaphore>
#include <string>

#include "core/config.h"
#include "llm/cache.h"
#include "llm/provider.h"

namespace sdtk::llm {

enum class CachePolicy {
  kDefault,  // temperature 0 is read from and written to the cache
  kReplay,   // any temperature is read from and written to the cache
  kBypass,   // the cache is neither read nor written
};

struct ClientOptions {
  std::string model_id = "gpt-4-0613";
  int max_tokens = 512;
  int max_concurrency = 4;
  int max_retries = 3;  // retries after the first attempt
  std::chrono::milliseconds backoff{500};  // doubled after every retry
  std::string cache_dir;  // empty keeps the cache in memory only
  bool log_prompts = false;
  bool replay = false;  // default policy becomes kReplay
  // Replaceable for tests.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// Thread-safe completion facade over one provider: caching, retries with
// exponential backoff, and a bound on outstanding provider calls.
class LlmClient {
 public:
  LlmClient(std::shared_ptr<Provider> provider, ClientOptions options);

  // Reads llm.* keys; the provider comes from MakeProvider().
  static std::unique_ptr<LlmClient> Create(const Config& config);

  // Fills in params.model_id / max_tokens when they are unset.
  CompletionRequest MakeRequest(std::string template_id, std::string prompt,
                                double temperature, int sample_index = 0) const;

  // Throws ProviderError: kAuth and kBadResponse immediately, kExhausted once
  // the retries for rate limits, timeouts and server errors are used up.
  std::string Complete(const CompletionRequest& request,
                       CachePolicy policy = CachePolicy::kDefault);

  const std::string& model_id() const { return options_.model_id; }
  std::string provider_name() const { return provider_->name(); }
  // Provider attempts so far, including failed ones.
  int provider_calls() const { return provider_calls_.load(); }
  int max_in_flight() const { return max_in_flight_.load(); }

 private:
  CompletionResponse CallWithRetries(const CompletionRequest& request);

  std::shared_ptr<Provider> provider_;
  ClientOptions options_;
  ResponseCache cache_;
  std::counting_semaphore<> slots_;
  std::atomic<int> provider_calls_{0};
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_in_flight_{0};
};

}  // namespace sdtk::llm

#endif  // SDTK_LLM_CLIENT_H_
