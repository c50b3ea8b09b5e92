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

#include "llm/client.h"

#include <thread>

#include "core/errors.h"
#include "core/tokenize.h"
#include "spdlog/spdlog.h"

namespace sdtk::llm {
namespace {

int EstimateTokens(const std::string& text) {
  return static_cast<int>(SplitWhitespace(text).size());
}

}  // namespace

LlmClient::LlmClient(std::shared_ptr<Provider> provider, ClientOptions options)
    : provider_(std::move(provider)),
      options_(std::move(options)),
      cache_(options_.cache_dir),
      slots_(std::max(1, options_.max_concurrency)) {
  if (!provider_) throw ConfigError("LlmClient needs a provider");
  if (!options_.sleep) {
    options_.sleep = [](std::chrono::milliseconds d) {
      std::this_thread::sleep_for(d);
    };
  }
}

std::unique_ptr<LlmClient> LlmClient::Create(const Config& config) {
  ClientOptions options;
  options.model_id = config.GetString("llm.model_id", options.model_id);
  options.max_tokens = static_cast<int>(config.GetInt("llm.max_tokens", options.max_tokens));
  options.max_concurrency =
      static_cast<int>(config.GetInt("llm.max_concurrency", options.max_concurrency));
  options.max_retries =
      static_cast<int>(config.GetInt("llm.max_retries", options.max_retries));
  options.backoff = std::chrono::milliseconds(
      config.GetInt("llm.backoff_ms", options.backoff.count()));
  options.cache_dir = config.GetString("llm.cache_dir", "");
  options.log_prompts = config.GetBool("llm.log_prompts", false);
  options.replay = config.GetBool("llm.replay", false);
  return std::make_unique<LlmClient>(MakeProvider(config), std::move(options));
}

CompletionRequest LlmClient::MakeRequest(std::string template_id,
                                         std::string prompt, double temperature,
                                         int sample_index) const {
  CompletionRequest req;
  req.template_id = std::move(template_id);
  req.rendered_prompt = std::move(prompt);
  req.params.temperature = temperature;
  req.params.max_tokens = options_.max_tokens;
  req.params.model_id = options_.model_id;
  req.sample_index = sample_index;
  return req;
}

CompletionResponse LlmClient::CallWithRetries(const CompletionRequest& request) {
  std::chrono::milliseconds delay = options_.backoff;
  for (int attempt = 0;; ++attempt) {
    try {
      slots_.acquire();
      const int now = ++in_flight_;
      int seen = max_in_flight_.load();
      while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
      }
      ++provider_calls_;
      struct Release {
        LlmClient* self;
        ~Release() {
          --self->in_flight_;
          self->slots_.release();
        }
      } release{this};
      return provider_->Complete(request);
    } catch (const ProviderError& e) {
      if (!e.retryable()) throw;
      if (attempt >= options_.max_retries) {
        throw ProviderError(ProviderFailure::kExhausted,
                            "gave up after " + std::to_string(attempt + 1) +
                                " attempts: " + e.what());
      }
      spdlog::warn("llm template={} attempt={} failed ({}); retrying in {} ms",
                   request.template_id, attempt + 1, e.what(), delay.count());
      options_.sleep(delay);
      delay *= 2;
    }
  }
}

std::string LlmClient::Complete(const CompletionRequest& request,
                                CachePolicy policy) {
  request.Validate();
  if (policy == CachePolicy::kDefault && options_.replay) {
    policy = CachePolicy::kReplay;
  }
  const bool use_cache =
      policy == CachePolicy::kReplay ||
      (policy == CachePolicy::kDefault && request.params.temperature == 0.0);
  std::string key;
  if (use_cache) {
    key = CacheKey(request);
    if (auto hit = cache_.Get(key)) {
      spdlog::info("llm template={} model={} cached=true", request.template_id,
                   request.params.model_id);
      return *hit;
    }
  }

  const CompletionResponse response = CallWithRetries(request);
  const int in_tokens = response.prompt_tokens >= 0
                            ? response.prompt_tokens
                            : EstimateTokens(request.rendered_prompt);
  const int out_tokens = response.completion_tokens >= 0
                             ? response.completion_tokens
                             : EstimateTokens(response.text);
  spdlog::info("llm template={} model={} prompt_tokens={} completion_tokens={}",
               request.template_id, request.params.model_id, in_tokens,
               out_tokens);
  if (options_.log_prompts) {
    spdlog::info("llm prompt: {}", request.rendered_prompt);
    spdlog::info("llm response: {}", response.text);
  } else {
    spdlog::debug("llm prompt/response redacted ({} and {} bytes)",
                  request.rendered_prompt.size(), response.text.size());
  }
  if (use_cache) cache_.Put(key, response.text, request.template_id);
  return response.text;
}

}  // namespace sdtk::llm
