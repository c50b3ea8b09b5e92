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

#include "llm/provider.h"

#include <cstdlib>
#include <map>

#include "core/errors.h"
#include "core/jsonl.h"

namespace sdtk::llm {

void CompletionRequest::Validate() const {
  if (rendered_prompt.empty()) throw InputError("completion prompt is empty");
  if (!(params.temperature >= 0.0 && params.temperature <= 2.0)) {
    throw InputError("temperature must be within [0, 2]");
  }
  if (params.max_tokens <= 0) throw InputError("max_tokens must be positive");
}

std::unique_ptr<StubProvider> StubProvider::FromJson(const Json& doc) {
  if (!doc.is_object()) throw ParseError("stub responses must be a JSON object");
  std::map<std::string, std::vector<std::string>> responses;
  if (auto it = doc.find("responses"); it != doc.end()) {
    for (const auto& [id, list] : it->items()) {
      if (list.is_string()) {
        responses[id].push_back(list.get<std::string>());
        continue;
      }
      if (!list.is_array() || list.empty()) {
        throw ParseError("stub responses for '" + id + "' must be a non-empty list");
      }
      for (const Json& r : list) responses[id].push_back(r.get<std::string>());
    }
  }
  std::optional<std::string> fallback = OptionalString(doc, "default");
  auto counters = std::make_shared<std::map<std::string, std::size_t>>();
  return std::make_unique<StubProvider>(
      [responses, fallback, counters](const CompletionRequest& req, int) {
        auto it = responses.find(req.template_id);
        if (it == responses.end()) {
          if (!fallback) {
            throw ProviderError(ProviderFailure::kBadResponse,
                                "stub has no response for " + req.template_id);
          }
          return CompletionResponse{*fallback};
        }
        const std::size_t n = (*counters)[req.template_id]++;
        return CompletionResponse{it->second[n % it->second.size()]};
      });
}

std::unique_ptr<StubProvider> StubProvider::Fixed(std::string text) {
  return std::make_unique<StubProvider>(
      [text](const CompletionRequest&, int) { return CompletionResponse{text}; });
}

CompletionResponse StubProvider::Complete(const CompletionRequest& request) {
  // Scripts may keep state, so they run under the lock.
  std::lock_guard<std::mutex> lock(mu_);
  requests_.push_back(request);
  return script_(request, static_cast<int>(requests_.size()) - 1);
}

int StubProvider::calls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<int>(requests_.size());
}

std::vector<CompletionRequest> StubProvider::requests() const {
  std::lock_guard<std::mutex> lock(mu_);
  return requests_;
}

std::unique_ptr<Provider> MakeProvider(const Config& config) {
  const std::string name = config.GetString("llm.provider", "openai");
  if (name == "stub") {
    auto path = config.GetOptionalString("llm.stub_responses_path");
    if (!path) throw ConfigError("stub provider needs llm.stub_responses_path");
    try {
      return StubProvider::FromJson(Json::parse(ReadFile(*path)));
    } catch (const Json::exception& e) {
      throw ParseError(*path + ": " + e.what());
    }
  }
  if (name == "openai") {
    const char* key = std::getenv("PROVIDER_API_KEY");
    const char* url = std::getenv("PROVIDER_BASE_URL");
    return MakeOpenAiProvider(url ? url : "https://api.openai.com/v1",
                              key ? key : "",
                              config.GetDouble("llm.timeout_s", 60.0));
  }
  throw ConfigError("unknown llm.provider '" + name + "'");
}

}  // namespace sdtk::llm
