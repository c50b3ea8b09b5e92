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

#include <mutex>

#include "core/errors.h"
#include "core/records.h"
#include "httplib.h"
#include "llm/provider.h"

namespace sdtk::llm {
namespace {

// Splits "https://host:port/v1" into the origin and the path prefix.
std::pair<std::string, std::string> SplitUrl(const std::string& url) {
  const auto scheme_end = url.find("://");
  const auto host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
  const auto path_start = url.find('/', host_start);
  if (path_start == std::string::npos) return {url, ""};
  std::string path = url.substr(path_start);
  while (!path.empty() && path.back() == '/') path.pop_back();
  return {url.substr(0, path_start), path};
}

class OpenAiProvider : public Provider {
 public:
  OpenAiProvider(const std::string& base_url, const std::string& api_key,
                 double timeout_s)
      : api_key_(api_key) {
    if (api_key.empty()) {
      throw ProviderError(ProviderFailure::kAuth, "PROVIDER_API_KEY is not set");
    }
    auto [origin, prefix] = SplitUrl(base_url);
    origin_ = origin;
    path_ = prefix + "/chat/completions";
    timeout_s_ = timeout_s;
  }

  CompletionResponse Complete(const CompletionRequest& request) override {
    httplib::Client client(origin_);
    if (!client.is_valid()) {
      throw ProviderError(ProviderFailure::kAuth, "bad base url " + origin_);
    }
    const auto sec = static_cast<time_t>(timeout_s_);
    const auto usec = static_cast<time_t>((timeout_s_ - sec) * 1e6);
    client.set_connection_timeout(sec, usec);
    client.set_read_timeout(sec, usec);
    client.set_write_timeout(sec, usec);
    client.set_bearer_token_auth(api_key_);

    const Json body = {
        {"model", request.params.model_id},
        {"messages", Json::array({{{"role", "user"},
                                   {"content", request.rendered_prompt}}})},
        {"temperature", request.params.temperature},
        {"max_tokens", request.params.max_tokens},
    };
    auto res = client.Post(path_, body.dump(), "application/json");
    if (!res) {
      const auto err = res.error();
      const auto failure = err == httplib::Error::Read ||
                                   err == httplib::Error::Write ||
                                   err == httplib::Error::ConnectionTimeout
                               ? ProviderFailure::kTimeout
                               : ProviderFailure::kServer;
      throw ProviderError(failure, httplib::to_string(err));
    }
    const int status = res->status;
    if (status == 401 || status == 403) {
      throw ProviderError(ProviderFailure::kAuth, "HTTP " + std::to_string(status));
    }
    if (status == 429) {
      throw ProviderError(ProviderFailure::kRateLimit, "HTTP 429");
    }
    if (status == 408 || status == 504) {
      throw ProviderError(ProviderFailure::kTimeout,
                          "HTTP " + std::to_string(status));
    }
    if (status >= 500) {
      throw ProviderError(ProviderFailure::kServer, "HTTP " + std::to_string(status));
    }
    if (status != 200) {
      throw ProviderError(ProviderFailure::kBadResponse,
                          "HTTP " + std::to_string(status));
    }
    try {
      const Json reply = Json::parse(res->body);
      CompletionResponse out;
      out.text = reply.at("choices").at(0).at("message").at("content").get<std::string>();
      if (auto usage = reply.find("usage"); usage != reply.end()) {
        out.prompt_tokens = usage->value("prompt_tokens", -1);
        out.completion_tokens = usage->value("completion_tokens", -1);
      }
      return out;
    } catch (const Json::exception& e) {
      throw ProviderError(ProviderFailure::kBadResponse, e.what());
    }
  }

  std::string name() const override { return "openai:" + origin_; }

 private:
  std::string api_key_;
  std::string origin_;
  std::string path_;
  double timeout_s_ = 60.0;
};

}  // namespace

std::unique_ptr<Provider> MakeOpenAiProvider(const std::string& base_url,
                                             const std::string& api_key,
                                             double timeout_s) {
  return std::make_unique<OpenAiProvider>(base_url, api_key, timeout_s);
}

}  // namespace sdtk::llm
