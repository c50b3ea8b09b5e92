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

#ifndef SDTK_LLM_PROVIDER_H_
#define SDTK_LLM_PROVIDER_H_

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "core/config.h"

namespace sdtk::llm {

struct CompletionParams {
  double temperature = 0.0;
  int max_tokens = 512;
  std::string model_id;
};

struct CompletionRequest {
  std::string template_id;
  std::string rendered_prompt;
  CompletionParams params;
  // Distinguishes repeated samples of one prompt in the cache; 0 for
  // ordinary requests.
  int sample_index = 0;

  // Throws InputError unless the prompt is non-empty, temperature is within
  // [0, 2] and max_tokens is positive.
  void Validate() const;
};

struct CompletionResponse {
  std::string text;
  int prompt_tokens = -1;  // -1 when the provider does not report usage
  int completion_tokens = -1;
};

// A chat-completion backend, remote or local. Failures are reported as
// ProviderError so the client can tell retryable ones apart.
class Provider {
 public:
  virtual ~Provider() = default;
  virtual CompletionResponse Complete(const CompletionRequest& request) = 0;
  virtual std::string name() const = 0;
};

// OpenAI-compatible POST {base_url}/chat/completions. An empty api_key is an
// authentication error at construction.
std::unique_ptr<Provider> MakeOpenAiProvider(const std::string& base_url,
                                             const std::string& api_key,
                                             double timeout_s);

// Deterministic scripted provider. Each call is answered by `script`; calls
// are recorded for inspection.
class StubProvider : public Provider {
 public:
  using Script = std::function<CompletionResponse(const CompletionRequest&, int call)>;

  explicit StubProvider(Script script) : script_(std::move(script)) {}

  // Replies from a JSON document:
  //   {"responses": {"<template_id>": ["r1", "r2", ...]}, "default": "r"}
  // Each template cycles through its list; unknown templates get "default".
  static std::unique_ptr<StubProvider> FromJson(const Json& doc);

  // Always answers `text`.
  static std::unique_ptr<StubProvider> Fixed(std::string text);

  CompletionResponse Complete(const CompletionRequest& request) override;
  std::string name() const override { return "stub"; }

  int calls() const;
  std::vector<CompletionRequest> requests() const;

 private:
  Script script_;
  mutable std::mutex mu_;
  std::vector<CompletionRequest> requests_;
};

// Builds the provider named by llm.provider ("openai" or "stub"). The
// OpenAI provider reads PROVIDER_API_KEY and PROVIDER_BASE_URL; the stub reads
// llm.stub_responses_path.
std::unique_ptr<Provider> MakeProvider(const Config& config);

}  // namespace sdtk::llm

#endif  // SDTK_LLM_PROVIDER_H_
