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

#ifndef SDTK_SERVICE_SERVICE_H_
#define SDTK_SERVICE_SERVICE_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/config.h"
#include "core/records.h"
#include "detect/pipeline.h"
#include "llm/client.h"

namespace sdtk::service {

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
  std::map<std::string, std::string> headers;  // lowercase names
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::map<std::string, std::string> headers;

  Json json() const { return Json::parse(body); }
};

struct ServiceOptions {
  std::vector<std::string> cors_origins;  // "*" allows any origin
  std::optional<std::string> token;       // required as "Bearer <token>"
  bool rate_with_thought = false;
  int rate_max_attempts = 3;
};

// Stateless request handler for the /v1 API. Handle() is reentrant; all
// mutable state lives in the pipeline plugins and the LLM client, which are
// themselves thread-safe.
class Service {
 public:
  // `client` may be null; routes needing it then answer 503.
  Service(std::unique_ptr<detect::DetectionPipeline> pipeline,
          std::unique_ptr<llm::LlmClient> client, Config config,
          ServiceOptions options);

  // Reads service.cors_origins, service.token, importance.with_thought and
  // importance.max_attempts. A provider that cannot be constructed (for
  // example, no API key) leaves the LLM routes unavailable.
  static std::unique_ptr<Service> Create(const Config& config);

  HttpResponse Handle(const HttpRequest& request) const;

  // Blocks serving HTTP until Stop() is called or the listener fails.
  // Returns false when the address could not be bound.
  bool Serve(const std::string& host, int port);
  void Stop();

  const std::optional<std::string>& llm_unavailable_reason() const {
    return llm_unavailable_;
  }

 private:
  Json Route(const HttpRequest& request, int* status) const;
  Json HandleDetect(const HttpRequest& request) const;
  Json HandleAbstract(const Json& body) const;
  llm::LlmClient& RequireClient() const;
  void AddCors(const HttpRequest& request, HttpResponse* response) const;

  std::unique_ptr<detect::DetectionPipeline> pipeline_;
  std::unique_ptr<llm::LlmClient> client_;
  std::optional<std::string> llm_unavailable_;
  Config config_;
  ServiceOptions options_;
  struct ServerHolder;
  std::shared_ptr<ServerHolder> server_;
};

// Published request and response schemas, served at /v1/schema.
const Json& Schemas();

// Category list with group and description, served at /v1/taxonomy.
Json Taxonomy();

}  // namespace sdtk::service

#endif  // SDTK_SERVICE_SERVICE_H_
