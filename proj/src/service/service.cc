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

#include "service/service.h"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include <algorithm>

#include "abstract/generate.h"
#include "core/category.h"
#include "core/errors.h"
#include "core/span.h"
#include "core/unicode.h"
#include "core/version.h"
#include "importance/importance.h"

namespace sdtk::service {
namespace {

constexpr const char* kDraftId = "draft";

struct HttpError {
  int status;
  std::string kind;
  std::string message;
  Json extra = Json::object();
};

[[noreturn]] void BadRequest(const std::string& message) {
  throw HttpError{400, "schema", message};
}

const Json& Field(const Json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end()) BadRequest(std::string("missing field '") + key + "'");
  return *it;
}

std::string StringField(const Json& body, const char* key) {
  const Json& v = Field(body, key);
  if (!v.is_string()) BadRequest(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t OffsetField(const Json& body, const char* key) {
  const Json& v = Field(body, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    BadRequest(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

void RejectUnknownFields(const Json& body, std::initializer_list<const char*> allowed) {
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return it.key() == a; }) == allowed.end()) {
      BadRequest("unknown field '" + it.key() + "'");
    }
  }
}

Json ParseBody(const HttpRequest& request) {
  Json body;
  try {
    body = Json::parse(request.body);
  } catch (const Json::parse_error& e) {
    BadRequest(std::string("body is not valid JSON: ") + e.what());
  }
  if (!body.is_object()) BadRequest("body must be a JSON object");
  return body;
}

bool QueryFlag(const HttpRequest& request, const std::string& key) {
  auto it = request.query.find(key);
  if (it == request.query.end()) return false;
  const std::string v = unicode::ToLower(it->second);
  if (v == "true" || v == "1" || v.empty()) return true;
  if (v == "false" || v == "0") return false;
  BadRequest("query flag '" + key + "' must be true or false");
}

Json ErrorBody(const std::string& kind, const std::string& message, const Json& extra) {
  Json err = {{"kind", kind}, {"message", message}};
  for (auto it = extra.begin(); it != extra.end(); ++it) err[it.key()] = it.value();
  return {{"error", err}};
}

Json SpanSchema() {
  return {{"type", "object"},
          {"required", {"doc_id", "start", "end", "category", "text"}},
          {"properties",
           {{"doc_id", {{"type", "string"}}},
            {"start", {{"type", "integer"}, {"minimum", 0}}},
            {"end", {{"type", "integer"}, {"minimum", 1}}},
            {"category", {{"type", "string"}}},
            {"text", {{"type", "string"}}}}}};
}

Json DocumentSchema() {
  return {{"type", "object"},
          {"required", {"id", "kind", "text", "thread_id"}},
          {"properties",
           {{"id", {{"type", "string"}}},
            {"kind", {{"enum", {"title", "body", "comment"}}}},
            {"text", {{"type", "string"}}},
            {"parent_id", {{"type", {"string", "null"}}}},
            {"thread_id", {{"type", "string"}}}}}};
}

Json EditSchema(bool with_replacement) {
  Json props = {{"text", {{"type", "string"}, {"minLength", 1}}},
                {"span_start", {{"type", "integer"}, {"minimum", 0}}},
                {"span_end", {{"type", "integer"}, {"minimum", 1}}}};
  Json required = {"text", "span_start", "span_end"};
  if (with_replacement) {
    props["replacement"] = {{"type", "string"}};
    required.push_back("replacement");
  } else {
    props["strategy"] = {{"enum", {"sampling", "end_to_end", "iterative"}}};
    props["category"] = {{"type", "string"}};
    required.push_back("strategy");
  }
  return {{"type", "object"},
          {"required", required},
          {"additionalProperties", false},
          {"properties", props}};
}

}  // namespace

const Json& Schemas() {
  static const Json kSchemas = [] {
    Json detect_req = {
        {"type", "object"},
        {"oneOf", {{{"required", {"text"}}}, {{"required", {"thread"}}}}},
        {"additionalProperties", false},
        {"properties",
         {{"text", {{"type", "string"}, {"minLength", 1}}},
          {"thread", {{"type", "array"}, {"minItems", 1}, {"items", DocumentSchema()}}}}}};
    Json rating = {{"type", "object"},
                   {"required", {"doc_id", "span_start", "span_end", "level"}},
                   {"properties",
                    {{"doc_id", {{"type", "string"}}},
                     {"span_start", {{"type", "integer"}, {"minimum", 0}}},
                     {"span_end", {{"type", "integer"}, {"minimum", 1}}},
                     {"level", {{"enum", {"Low", "Moderate", "High"}}}},
                     {"rationale", {{"type", {"string", "null"}}}}}}};
    Json detect_resp = {
        {"type", "object"},
        {"required", {"spans", "model_versions"}},
        {"properties",
         {{"spans", {{"type", "array"}, {"items", SpanSchema()}}},
          {"ratings", {{"type", "array"}, {"items", rating}}},
          {"model_versions", {{"type", "object"}, {"additionalProperties", {{"type", "string"}}}}}}}};
    Json apply_resp = {{"type", "object"},
                       {"required", {"new_text", "new_end"}},
                       {"properties",
                        {{"new_text", {{"type", "string"}}},
                         {"new_end", {{"type", "integer"}, {"minimum", 0}}}}}};
    Json abstract_resp = {
        {"type", "object"},
        {"required", {"span", "candidates", "strategy", "validation"}},
        {"properties",
         {{"span", SpanSchema()},
          {"candidates", {{"type", "array"}, {"items", {{"type", "string"}}}}},
          {"rationale", {{"type", {"string", "null"}}}},
          {"strategy", {{"enum", {"sampling", "end_to_end", "iterative"}}}},
          {"validation", {{"type", "array"}}},
          {"model_versions", {{"type", "object"}}}}}};
    Json error = {{"type", "object"},
                  {"required", {"error"}},
                  {"properties",
                   {{"error",
                     {{"type", "object"},
                      {"required", {"kind", "message"}},
                      {"properties",
                       {{"kind", {{"type", "string"}}}, {"message", {{"type", "string"}}}}}}}}}};
    return Json{{"$schema", "https://json-schema.org/draft/2020-12/schema"},
                {"version", kVersion},
                {"DisclosureSpan", SpanSchema()},
                {"Document", DocumentSchema()},
                {"DetectRequest", detect_req},
                {"DetectResponse", detect_resp},
                {"AbstractRequest", EditSchema(false)},
                {"AbstractResponse", abstract_resp},
                {"ApplyRequest", EditSchema(true)},
                {"ApplyResponse", apply_resp},
                {"Error", error}};
  }();
  return kSchemas;
}

Json Taxonomy() {
  Json out = Json::array();
  for (Category c : kAllCategories) {
    out.push_back({{"name", CategoryName(c)},
                   {"group", GroupName(GroupOf(c))},
                   {"description", CategoryDescription(c)}});
  }
  return out;
}

struct Service::ServerHolder {
  httplib::Server server;
};

Service::Service(std::unique_ptr<detect::DetectionPipeline> pipeline,
                 std::unique_ptr<llm::LlmClient> client, Config config,
                 ServiceOptions options)
    : pipeline_(std::move(pipeline)),
      client_(std::move(client)),
      config_(std::move(config)),
      options_(std::move(options)),
      server_(std::make_shared<ServerHolder>()) {
  if (!client_) llm_unavailable_ = "no LLM provider configured";
}

std::unique_ptr<Service> Service::Create(const Config& config) {
  ServiceOptions options;
  options.cors_origins = config.GetStringList("service.cors_origins");
  options.token = config.GetOptionalString("service.token");
  if (options.token && options.token->empty()) options.token.reset();
  options.rate_with_thought = config.GetBool("importance.with_thought", false);
  options.rate_max_attempts = static_cast<int>(config.GetInt("importance.max_attempts", 3));
  std::unique_ptr<llm::LlmClient> client;
  std::optional<std::string> reason;
  try {
    client = llm::LlmClient::Create(config);
  } catch (const Error& e) {
    reason = e.what();
    spdlog::warn("LLM routes disabled: {}", e.what());
  }
  auto service = std::make_unique<Service>(detect::DetectionPipeline::Create(config),
                                           std::move(client), config, std::move(options));
  if (reason) service->llm_unavailable_ = reason;
  return service;
}

llm::LlmClient& Service::RequireClient() const {
  if (!client_) {
    throw HttpError{503, "provider_unavailable",
                    llm_unavailable_.value_or("no LLM provider configured")};
  }
  return *client_;
}

Json Service::HandleDetect(const HttpRequest& request) const {
  const Json body = ParseBody(request);
  RejectUnknownFields(body, {"text", "thread"});
  const bool rate = QueryFlag(request, "rate");
  std::vector<Document> thread;
  if (body.contains("text") == body.contains("thread")) {
    BadRequest("give exactly one of 'text' or 'thread'");
  }
  if (body.contains("text")) {
    Document doc;
    doc.id = kDraftId;
    doc.thread_id = kDraftId;
    doc.text = StringField(body, "text");
    if (doc.text.empty()) BadRequest("field 'text' must not be empty");
    thread.push_back(std::move(doc));
  } else {
    const Json& docs = body["thread"];
    if (!docs.is_array() || docs.empty()) BadRequest("field 'thread' must be a non-empty array");
    for (const Json& d : docs) {
      try {
        thread.push_back(DocumentFromJson(d));
      } catch (const Error& e) {
        BadRequest(std::string("thread document: ") + e.what());
      }
    }
  }

  Json spans = Json::array();
  Json ratings = Json::array();
  llm::LlmClient* client = rate ? &RequireClient() : nullptr;
  for (const Document& doc : thread) {
    if (doc.text.empty()) continue;
    for (const DisclosureSpan& span : pipeline_->Detect(doc).spans) {
      spans.push_back(ToJson(span));
      if (client) {
        const auto context = importance::AssembleContext(span, thread);
        ratings.push_back(ToJson(importance::RateImportance(
            context, *client, options_.rate_with_thought, options_.rate_max_attempts)));
      }
    }
  }
  Json versions = pipeline_->ModelVersions();
  if (client) versions["importance"] = client->model_id();
  Json out = {{"spans", spans}, {"model_versions", versions}};
  if (client) out["ratings"] = ratings;
  return out;
}

Json Service::HandleAbstract(const Json& body) const {
  RejectUnknownFields(body, {"text", "span_start", "span_end", "strategy", "category"});
  const std::string text = StringField(body, "text");
  const std::size_t start = OffsetField(body, "span_start");
  const std::size_t end = OffsetField(body, "span_end");
  Strategy strategy;
  try {
    strategy = ParseStrategy(StringField(body, "strategy"));
  } catch (const Error& e) {
    BadRequest(e.what());
  }
  Category category = kAllCategories.front();
  if (body.contains("category")) {
    auto parsed = ParseCategory(StringField(body, "category"));
    if (!parsed) BadRequest("unknown category '" + body["category"].get<std::string>() + "'");
    category = *parsed;
  }
  if (text.empty()) BadRequest("field 'text' must not be empty");
  llm::LlmClient& client = RequireClient();
  const DisclosureSpan span = MakeSpan(kDraftId, text, start, end, category);
  const auto sentence = abstract::LocateSentence(text, span);
  const auto options = abstract::GenerateOptions::FromConfig(config_, strategy);
  try {
    Json out = ToJson(abstract::GenerateAbstractions(span, sentence, options, client));
    out["model_versions"] = {{"abstraction", client.model_id()},
                             {"template", abstract::TemplateFor(strategy, options.with_thought)}};
    return out;
  } catch (const PartialResultError& e) {
    throw HttpError{502, "partial_result", e.what(), {{"candidates", e.valid()}}};
  }
}

Json Service::Route(const HttpRequest& request, int* status) const {
  const std::string& path = request.path;
  const std::string& method = request.method;
  auto require = [&](const char* want) {
    if (method != want) throw HttpError{405, "method_not_allowed", method + " " + path};
  };
  *status = 200;
  if (path == "/health") {
    require("GET");
    Json versions = pipeline_->ModelVersions();
    versions["sdtk"] = kVersion;
    if (client_) versions["llm"] = client_->model_id();
    return {{"status", "ok"}, {"versions", versions}, {"llm_available", client_ != nullptr}};
  }
  if (path == "/v1/taxonomy") {
    require("GET");
    return Taxonomy();
  }
  if (path == "/v1/schema") {
    require("GET");
    return Schemas();
  }
  if (path == "/v1/detect") {
    require("POST");
    return HandleDetect(request);
  }
  if (path == "/v1/abstract") {
    require("POST");
    return HandleAbstract(ParseBody(request));
  }
  if (path == "/v1/apply") {
    require("POST");
    const Json body = ParseBody(request);
    RejectUnknownFields(body, {"text", "span_start", "span_end", "replacement"});
    const std::string text = StringField(body, "text");
    const std::size_t start = OffsetField(body, "span_start");
    const std::size_t end = OffsetField(body, "span_end");
    const std::string replacement = StringField(body, "replacement");
    const EditResult edit = ApplyEdit(text, start, end, replacement);
    return {{"new_text", edit.new_text}, {"new_end", edit.new_end}};
  }
  throw HttpError{404, "not_found", "no route for " + path};
}

void Service::AddCors(const HttpRequest& request, HttpResponse* response) const {
  auto it = request.headers.find("origin");
  if (it == request.headers.end()) return;
  const auto& origins = options_.cors_origins;
  const bool any = std::find(origins.begin(), origins.end(), "*") != origins.end();
  if (!any && std::find(origins.begin(), origins.end(), it->second) == origins.end()) return;
  response->headers["Access-Control-Allow-Origin"] = any ? "*" : it->second;
  response->headers["Access-Control-Allow-Methods"] = "GET, POST, OPTIONS";
  response->headers["Access-Control-Allow-Headers"] = "Content-Type, Authorization";
  if (!any) response->headers["Vary"] = "Origin";
}

HttpResponse Service::Handle(const HttpRequest& request) const {
  HttpResponse response;
  AddCors(request, &response);
  if (request.method == "OPTIONS") {
    response.status = 204;
    return response;
  }
  response.headers["Content-Type"] = "application/json";
  Json body;
  try {
    if (options_.token && request.path != "/health") {
      auto it = request.headers.find("authorization");
      if (it == request.headers.end() || it->second != "Bearer " + *options_.token) {
        throw HttpError{401, "unauthorized", "missing or wrong bearer token"};
      }
    }
    body = Route(request, &response.status);
  } catch (const HttpError& e) {
    response.status = e.status;
    body = ErrorBody(e.kind, e.message, e.extra);
  } catch (const RangeError& e) {
    response.status = 422;
    body = ErrorBody("range", e.what(), Json::object());
  } catch (const ProviderError& e) {
    response.status = 502;
    body = ErrorBody("provider", e.what(), {{"failure", ProviderFailureName(e.failure())}});
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kInput:
        response.status = 400;
        body = ErrorBody("input", e.what(), Json::object());
        break;
      case ErrorKind::kPlugin:
        response.status = 503;
        body = ErrorBody("plugin", e.what(), Json::object());
        break;
      case ErrorKind::kProvider:
        response.status = 502;
        body = ErrorBody("provider", e.what(), Json::object());
        break;
      default:
        response.status = 500;
        body = ErrorBody("internal", e.what(), Json::object());
    }
  } catch (const std::exception& e) {
    spdlog::error("unhandled error on {} {}: {}", request.method, request.path, e.what());
    response.status = 500;
    body = ErrorBody("internal", e.what(), Json::object());
  }
  response.body = body.dump();
  return response;
}

bool Service::Serve(const std::string& host, int port) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    HttpRequest request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [k, v] : req.params) request.query.emplace(k, v);
    for (const auto& [k, v] : req.headers) request.headers[unicode::ToLower(k)] = v;
    request.body = req.body;
    const HttpResponse response = Handle(request);
    res.status = response.status;
    for (const auto& [k, v] : response.headers) {
      if (k != "Content-Type") res.set_header(k, v);
    }
    if (!response.body.empty()) res.set_content(response.body, "application/json");
  };
  auto& server = server_->server;
  server.Get(".*", handler);
  server.Post(".*", handler);
  server.Options(".*", handler);
  server.Put(".*", handler);
  server.Delete(".*", handler);
  spdlog::info("listening on {}:{}", host, port);
  return server.listen(host, port);
}

void Service::Stop() {
  server_->server.stop();
}

}  // namespace sdtk::service
