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

#include <gtest/gtest.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <thread>

#include "core/errors.h"
#include "detect/builtin_plugins.h"
#include "detect/pipeline.h"
#include "httplib.h"
#include "llm/client.h"
#include "service/service.h"

namespace sdtk::service {
namespace {

using llm::CompletionRequest;
using llm::CompletionResponse;
using llm::StubProvider;

constexpr char kE2eReply[] =
    R"({"span 1": "a big city", "span 2": "the Midwest", "span 3": "a US state"})";

std::shared_ptr<StubProvider> Stub() {
  return std::make_shared<StubProvider>([](const CompletionRequest& req, int) {
    if (req.template_id.rfind("importance", 0) == 0) {
      return CompletionResponse{R"({"Importance": "High"})"};
    }
    return CompletionResponse{kE2eReply};
  });
}

std::unique_ptr<Service> Make(std::shared_ptr<llm::Provider> provider,
                              ServiceOptions options = {}) {
  std::unique_ptr<llm::LlmClient> client;
  if (provider) {
    llm::ClientOptions co;
    co.sleep = [](std::chrono::milliseconds) {};
    client = std::make_unique<llm::LlmClient>(std::move(provider), co);
  }
  return std::make_unique<Service>(detect::DetectionPipeline::Create(Config()),
                                   std::move(client), Config(), std::move(options));
}

HttpRequest Post(std::string path, Json body) {
  return {"POST", std::move(path), {}, body.dump(), {}};
}

TEST(ServiceTest, HealthTaxonomySchema) {
  auto service = Make(nullptr);
  HttpResponse r = service->Handle({"GET", "/health", {}, "", {}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.json()["status"], "ok");
  EXPECT_FALSE(r.json()["llm_available"].get<bool>());
  EXPECT_TRUE(r.json()["versions"].contains("sdtk"));

  r = service->Handle({"GET", "/v1/taxonomy", {}, "", {}});
  ASSERT_EQ(r.status, 200);
  const Json taxonomy = r.json();
  ASSERT_EQ(taxonomy.size(), 19u);
  int attributes = 0, experiences = 0;
  for (const Json& entry : taxonomy) {
    EXPECT_FALSE(entry["description"].get<std::string>().empty());
    (entry["group"] == "attribute" ? attributes : experiences)++;
  }
  EXPECT_EQ(attributes, 13);
  EXPECT_EQ(experiences, 6);

  r = service->Handle({"GET", "/v1/schema", {}, "", {}});
  ASSERT_EQ(r.status, 200);
  for (const char* key : {"DetectRequest", "DetectResponse", "AbstractRequest",
                          "AbstractResponse", "ApplyRequest", "ApplyResponse", "Error"}) {
    EXPECT_TRUE(r.json().contains(key)) << key;
  }
}

TEST(ServiceTest, DetectContactSpan) {
  auto service = Make(nullptr);
  const HttpResponse r = service->Handle(Post("/v1/detect", {{"text", "xxx is my ig"}}));
  ASSERT_EQ(r.status, 200) << r.body;
  const Json spans = r.json()["spans"];
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0]["category"], "Contact");
  EXPECT_EQ(spans[0]["doc_id"], "draft");
  EXPECT_FALSE(r.json().contains("ratings"));
  EXPECT_TRUE(r.json()["model_versions"].contains("tagger"));
}

TEST(ServiceTest, DetectThreadWithRatings) {
  auto stub = Stub();
  auto service = Make(stub);
  const Json thread = Json::array(
      {{{"id", "t"}, {"kind", "title"}, {"text", "Advice"}, {"thread_id", "x"}},
       {{"id", "b"}, {"kind", "body"}, {"text", ""}, {"thread_id", "x"}},
       {{"id", "c"}, {"kind", "comment"}, {"text", "xxx is my ig"}, {"thread_id", "x"}}});
  HttpRequest req = Post("/v1/detect", {{"thread", thread}});
  req.query["rate"] = "true";
  const HttpResponse r = service->Handle(req);
  ASSERT_EQ(r.status, 200) << r.body;
  const Json out = r.json();
  ASSERT_EQ(out["spans"].size(), 1u);
  EXPECT_EQ(out["spans"][0]["doc_id"], "c");
  ASSERT_EQ(out["ratings"].size(), 1u);
  EXPECT_EQ(out["ratings"][0]["level"], "High");
  EXPECT_TRUE(out["model_versions"].contains("importance"));
}

TEST(ServiceTest, DetectBadRequests) {
  auto service = Make(nullptr);
  EXPECT_EQ(service->Handle({"POST", "/v1/detect", {}, "{", {}}).status, 400);
  EXPECT_EQ(service->Handle(Post("/v1/detect", {{"text", ""}})).status, 400);
  EXPECT_EQ(service->Handle(Post("/v1/detect", {{"text", "a"}, {"extra", 1}})).status, 400);
  EXPECT_EQ(service->Handle(Post("/v1/detect", Json::object())).status, 400);
  const HttpResponse r = service->Handle(Post("/v1/detect", {{"text", 5}}));
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.json()["error"]["kind"], "schema");
  HttpRequest rated = Post("/v1/detect", {{"text", "hi"}});
  rated.query["rate"] = "true";
  EXPECT_EQ(service->Handle(rated).status, 503);
}

TEST(ServiceTest, ApplyEdit) {
  auto service = Make(nullptr);
  HttpResponse r = service->Handle(Post(
      "/v1/apply", {{"text", "I live in Ohio."}, {"span_start", 10}, {"span_end", 14},
                    {"replacement", "Ohio"}}));
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.json()["new_text"], "I live in Ohio.");
  EXPECT_EQ(r.json()["new_end"], 14);
  r = service->Handle(Post("/v1/apply", {{"text", "I live in Ohio."}, {"span_start", 10},
                                         {"span_end", 14}, {"replacement", "the Midwest"}}));
  EXPECT_EQ(r.json()["new_text"], "I live in the Midwest.");
  EXPECT_EQ(r.json()["new_end"], 21);
  r = service->Handle(Post("/v1/apply", {{"text", "short"}, {"span_start", 3},
                                         {"span_end", 40}, {"replacement", "x"}}));
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.json()["error"]["kind"], "range");
}

Json AbstractBody() {
  return {{"text", "I live in Ohio. It is cold."}, {"span_start", 10}, {"span_end", 14},
          {"strategy", "end_to_end"}, {"category", "Location"}};
}

TEST(ServiceTest, AbstractEndToEnd) {
  auto service = Make(Stub());
  const HttpResponse r = service->Handle(Post("/v1/abstract", AbstractBody()));
  ASSERT_EQ(r.status, 200) << r.body;
  const Json out = r.json();
  EXPECT_EQ(out["candidates"],
            Json::array({"a big city", "the Midwest", "a US state"}));
  EXPECT_EQ(out["strategy"], "end_to_end");
  EXPECT_EQ(out["span"]["text"], "Ohio");
  EXPECT_EQ(out["validation"].size(), 3u);
}

TEST(ServiceTest, AbstractErrors) {
  EXPECT_EQ(Make(nullptr)->Handle(Post("/v1/abstract", AbstractBody())).status, 503);

  auto failing = std::make_shared<StubProvider>(
      [](const CompletionRequest&, int) -> CompletionResponse {
        throw ProviderError(ProviderFailure::kAuth, "bad key");
      });
  HttpResponse r = Make(failing)->Handle(Post("/v1/abstract", AbstractBody()));
  EXPECT_EQ(r.status, 502);
  EXPECT_EQ(r.json()["error"]["failure"], "auth");

  auto partial = std::make_shared<StubProvider>([](const CompletionRequest&, int) {
    return CompletionResponse{R"({"span 1": "a big city", "span 2": "Ohio", "span 3": ""})"};
  });
  r = Make(partial)->Handle(Post("/v1/abstract", AbstractBody()));
  EXPECT_EQ(r.status, 502);
  EXPECT_EQ(r.json()["error"]["candidates"], Json::array({"a big city"}));

  Json bad = AbstractBody();
  bad["strategy"] = "guess";
  EXPECT_EQ(Make(Stub())->Handle(Post("/v1/abstract", bad)).status, 400);
  bad = AbstractBody();
  bad["category"] = "Zodiac";
  EXPECT_EQ(Make(Stub())->Handle(Post("/v1/abstract", bad)).status, 400);
  bad = AbstractBody();
  bad["span_end"] = 99;
  EXPECT_EQ(Make(Stub())->Handle(Post("/v1/abstract", bad)).status, 422);
}

TEST(ServiceTest, RoutingAndMethods) {
  auto service = Make(nullptr);
  EXPECT_EQ(service->Handle({"GET", "/v1/nope", {}, "", {}}).status, 404);
  EXPECT_EQ(service->Handle({"GET", "/v1/detect", {}, "", {}}).status, 405);
  EXPECT_EQ(service->Handle({"POST", "/health", {}, "", {}}).status, 405);
}

class ThrowingTagger : public detect::Tagger {
 public:
  detect::TaggerOutput Tag(const detect::Chunk&) const override {
    throw std::runtime_error("model offline");
  }
  std::string version() const override { return "throwing"; }
};

TEST(ServiceTest, PluginFailureIs503) {
  detect::DetectionPipeline::Parts parts;
  parts.tagger = std::make_unique<ThrowingTagger>();
  parts.gate = std::make_unique<detect::KeywordGate>();
  parts.contact_rules = detect::RegexRuleSet::Load("", "rules/contact_rules.json");
  Service service(std::make_unique<detect::DetectionPipeline>(std::move(parts)), nullptr,
                  Config(), {});
  const HttpResponse r = service.Handle(Post("/v1/detect", {{"text", "hello there"}}));
  EXPECT_EQ(r.status, 503);
  EXPECT_EQ(r.json()["error"]["kind"], "plugin");
}

TEST(ServiceTest, BearerToken) {
  ServiceOptions options;
  options.token = "s3cret";
  auto service = Make(nullptr, options);
  EXPECT_EQ(service->Handle({"GET", "/health", {}, "", {}}).status, 200);
  EXPECT_EQ(service->Handle({"GET", "/v1/taxonomy", {}, "", {}}).status, 401);
  EXPECT_EQ(service->Handle({"GET", "/v1/taxonomy", {}, "", {{"authorization", "Bearer x"}}})
                .status,
            401);
  EXPECT_EQ(
      service->Handle({"GET", "/v1/taxonomy", {}, "", {{"authorization", "Bearer s3cret"}}})
          .status,
      200);
}

TEST(ServiceTest, Cors) {
  ServiceOptions options;
  options.cors_origins = {"http://localhost:5173"};
  auto service = Make(nullptr, options);
  HttpResponse r =
      service->Handle({"OPTIONS", "/v1/detect", {}, "", {{"origin", "http://localhost:5173"}}});
  EXPECT_EQ(r.status, 204);
  EXPECT_EQ(r.headers["Access-Control-Allow-Origin"], "http://localhost:5173");
  r = service->Handle({"GET", "/health", {}, "", {{"origin", "http://evil.example"}}});
  EXPECT_FALSE(r.headers.count("Access-Control-Allow-Origin"));

  options.cors_origins = {"*"};
  r = Make(nullptr, options)->Handle({"GET", "/health", {}, "", {{"origin", "http://a.b"}}});
  EXPECT_EQ(r.headers["Access-Control-Allow-Origin"], "*");
}

TEST(ServiceTest, CreateWithoutProviderKeyDisablesLlmRoutes) {
  Config config;
  config.Set("llm.provider", "nope");
  auto service = Service::Create(config);
  EXPECT_TRUE(service->llm_unavailable_reason());
  const HttpResponse r = service->Handle(Post("/v1/abstract", AbstractBody()));
  EXPECT_EQ(r.status, 503);
  EXPECT_EQ(r.json()["error"]["kind"], "provider_unavailable");
}

int FreePort() {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  ::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr));
  socklen_t len = sizeof(addr);
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  ::close(fd);
  return ntohs(addr.sin_port);
}

TEST(ServiceTest, ServesOverHttp) {
  auto service = Make(nullptr);
  const int port = FreePort();
  std::thread server([&] { service->Serve("127.0.0.1", port); });
  httplib::Client client("127.0.0.1", port);
  httplib::Result res;
  for (int i = 0; i < 200 && !res; ++i) {
    res = client.Get("/health");
    if (!res) std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  res = client.Post("/v1/detect", R"({"text": "xxx is my ig"})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(Json::parse(res->body)["spans"].size(), 1u);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
  service->Stop();
  server.join();
}

}  // namespace
}  // namespace sdtk::service
