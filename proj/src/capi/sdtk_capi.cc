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

#include "sdtk/sdtk.h"

#include <spdlog/cfg/env.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <string>

#include "app/ops.h"
#include "core/config.h"
#include "core/errors.h"
#include "core/records.h"
#include "core/span.h"
#include "core/version.h"
#include "detect/pipeline.h"
#include "service/service.h"

struct sdtk_context {
  sdtk::Config config;
  std::once_flag pipeline_once;
  std::unique_ptr<sdtk::detect::DetectionPipeline> pipeline;
  std::once_flag service_once;
  std::unique_ptr<sdtk::service::Service> service;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_json = "null";

const char* KindName(sdtk::ErrorKind kind) {
  switch (kind) {
    case sdtk::ErrorKind::kInput:
      return "input";
    case sdtk::ErrorKind::kPlugin:
      return "plugin";
    case sdtk::ErrorKind::kProvider:
      return "provider";
    default:
      return "internal";
  }
}

sdtk_status Fail(sdtk::ErrorKind kind, const std::string& message) {
  g_error = message;
  g_error_json = sdtk::Json{{"kind", KindName(kind)}, {"message", message}}.dump();
  return static_cast<sdtk_status>(kind);
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Emit(const sdtk::Json& j, char** out) {
  if (out) *out = Dup(j.dump());
}

std::string Require(const char* s, const char* name) {
  if (!s) throw sdtk::InputError(std::string(name) + " must not be NULL");
  return s;
}

std::optional<std::string> Optional(const char* s) {
  if (!s || !*s) return std::nullopt;
  return std::string(s);
}

sdtk::Json ParseObject(const char* json, const char* name) {
  if (!json || !*json) return sdtk::Json::object();
  sdtk::Json j;
  try {
    j = sdtk::Json::parse(json);
  } catch (const sdtk::Json::parse_error& e) {
    throw sdtk::InputError(std::string(name) + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw sdtk::InputError(std::string(name) + " must be a JSON object");
  return j;
}

// Runs `fn`, translating exceptions into statuses.
template <typename Fn>
sdtk_status Guard(Fn&& fn) {
  g_error.clear();
  g_error_json = "null";
  try {
    fn();
    return SDTK_OK;
  } catch (const sdtk::Error& e) {
    return Fail(e.kind(), e.what());
  } catch (const sdtk::Json::exception& e) {
    return Fail(sdtk::ErrorKind::kInput, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(sdtk::ErrorKind::kInternal, "out of memory");
  } catch (const std::exception& e) {
    return Fail(sdtk::ErrorKind::kInternal, e.what());
  } catch (...) {
    return Fail(sdtk::ErrorKind::kInternal, "unknown error");
  }
}

sdtk_context& Ctx(sdtk_context* ctx) {
  if (!ctx) throw sdtk::InputError("context must not be NULL");
  return *ctx;
}

// Logs go to stderr. SPDLOG_LEVEL applies.
void InitLogging() {
  static std::once_flag once;
  std::call_once(once, [] {
    auto logger = spdlog::stderr_color_mt("sdtk");
    spdlog::set_default_logger(logger);
    spdlog::cfg::load_env_levels();
  });
}

sdtk::service::Service& ServiceOf(sdtk_context& ctx) {
  std::call_once(ctx.service_once,
                 [&] { ctx.service = sdtk::service::Service::Create(ctx.config); });
  return *ctx.service;
}

}  // namespace

extern "C" {

const char* sdtk_version(void) { return sdtk::kVersion; }
const char* sdtk_last_error(void) { return g_error.c_str(); }
const char* sdtk_last_error_json(void) { return g_error_json.c_str(); }
void sdtk_free(char* s) { std::free(s); }

sdtk_status sdtk_context_create(const char* config_path, const char* overrides_json,
                                sdtk_context** out) {
  return Guard([&] {
    if (!out) throw sdtk::InputError("out must not be NULL");
    InitLogging();
    *out = nullptr;
    auto ctx = std::make_unique<sdtk_context>();
    if (auto path = Optional(config_path)) ctx->config = sdtk::Config::FromFile(*path);
    ctx->config.ApplyEnvironment(sdtk::KnownConfigKeys());
    const sdtk::Json overrides = ParseObject(overrides_json, "overrides");
    for (auto it = overrides.begin(); it != overrides.end(); ++it) {
      ctx->config.Set(it.key(), it.value());
    }
    *out = ctx.release();
  });
}

void sdtk_context_destroy(sdtk_context* ctx) { delete ctx; }

sdtk_status sdtk_detect_text(sdtk_context* ctx, const char* text, char** out_json) {
  return Guard([&] {
    sdtk_context& c = Ctx(ctx);
    std::call_once(c.pipeline_once, [&] {
      c.pipeline = sdtk::detect::DetectionPipeline::Create(c.config);
    });
    sdtk::Document doc;
    doc.id = "draft";
    doc.thread_id = "draft";
    doc.text = Require(text, "text");
    sdtk::Json spans = sdtk::Json::array();
    for (const auto& s : c.pipeline->Detect(doc).spans) spans.push_back(sdtk::ToJson(s));
    Emit({{"spans", spans}, {"model_versions", c.pipeline->ModelVersions()}}, out_json);
  });
}

sdtk_status sdtk_apply_edit(const char* text, size_t start, size_t end,
                            const char* replacement, char** out_json) {
  return Guard([&] {
    const auto edit =
        sdtk::ApplyEdit(Require(text, "text"), start, end, Require(replacement, "replacement"));
    Emit({{"new_text", edit.new_text}, {"new_end", edit.new_end}}, out_json);
  });
}

sdtk_status sdtk_detect_file(sdtk_context* ctx, const char* docs_path, const char* out_path,
                             const char* strategy, char** summary_json) {
  return Guard([&] {
    Emit(sdtk::app::DetectFile(Ctx(ctx).config, Require(docs_path, "docs_path"),
                               Require(out_path, "out_path"), Optional(strategy)),
         summary_json);
  });
}

sdtk_status sdtk_eval_files(const char* pred_path, const char* gold_path,
                            const char* docs_path, const char* report_path,
                            char** summary_json, char** table_text) {
  return Guard([&] {
    std::string table;
    const auto report =
        sdtk::app::EvalFiles(Require(pred_path, "pred_path"), Require(gold_path, "gold_path"),
                             Optional(docs_path), Require(report_path, "report_path"), &table);
    Emit(report, summary_json);
    if (table_text) *table_text = Dup(table);
  });
}

sdtk_status sdtk_abstract_file(sdtk_context* ctx, const char* spans_path,
                               const char* docs_path, const char* strategy,
                               const char* out_path, char** summary_json) {
  return Guard([&] {
    Emit(sdtk::app::AbstractFile(Ctx(ctx).config, Require(spans_path, "spans_path"),
                                 Require(docs_path, "docs_path"),
                                 Optional(strategy).value_or("end_to_end"),
                                 Require(out_path, "out_path")),
         summary_json);
  });
}

sdtk_status sdtk_rate_file(sdtk_context* ctx, const char* spans_path,
                           const char* threads_path, const char* out_path,
                           char** summary_json) {
  return Guard([&] {
    Emit(sdtk::app::RateFile(Ctx(ctx).config, Require(spans_path, "spans_path"),
                             Require(threads_path, "threads_path"),
                             Require(out_path, "out_path")),
         summary_json);
  });
}

sdtk_status sdtk_corpus_ingest_brat(const char* dir, const char* docs_out,
                                    const char* spans_out, const char* annotator_id,
                                    char** summary_json) {
  return Guard([&] {
    Emit(sdtk::app::IngestBrat(Require(dir, "dir"), Require(docs_out, "docs_out"),
                               Require(spans_out, "spans_out"),
                               Optional(annotator_id).value_or("")),
         summary_json);
  });
}

sdtk_status sdtk_corpus_filter_reddit(sdtk_context* ctx, const char* in_path,
                                      const char* out_path, char** summary_json) {
  return Guard([&] {
    Emit(sdtk::app::FilterRedditFile(Ctx(ctx).config, Require(in_path, "in_path"),
                                     Require(out_path, "out_path")),
         summary_json);
  });
}

sdtk_status sdtk_corpus_filter_sharegpt(const char* in_path, const char* out_path,
                                        size_t max_tokens, char** summary_json) {
  return Guard([&] {
    Emit(sdtk::app::FilterShareGptFile(Require(in_path, "in_path"),
                                       Require(out_path, "out_path"), max_tokens),
         summary_json);
  });
}

sdtk_status sdtk_corpus_split(const char* in_path, const char* out_dir,
                              const char* options_json, char** summary_json) {
  return Guard([&] {
    const sdtk::Json j = ParseObject(options_json, "options");
    sdtk::corpus::SplitOptions options;
    if (j.contains("counts")) options.counts = j.at("counts").get<std::array<std::size_t, 3>>();
    if (j.contains("ratios")) options.ratios = j.at("ratios").get<std::array<double, 3>>();
    options.seed = j.value("seed", std::uint64_t{0});
    options.time_ordered = j.value("time_ordered", false);
    options.thread_field = j.value("thread_field", options.thread_field);
    options.time_field = j.value("time_field", options.time_field);
    Emit(sdtk::app::SplitFile(Require(in_path, "in_path"), Require(out_dir, "out_dir"),
                              options),
         summary_json);
  });
}

sdtk_status sdtk_corpus_sample(const char* in_path, const char* out_path, size_t n,
                               uint64_t seed, int dedup, char** summary_json) {
  return Guard([&] {
    sdtk::corpus::SampleOptions options;
    options.n = n;
    options.seed = seed;
    if (!dedup) options.dedup_fields.clear();
    Emit(sdtk::app::SampleFile(Require(in_path, "in_path"), Require(out_path, "out_path"),
                               options),
         summary_json);
  });
}

sdtk_status sdtk_distill(sdtk_context* ctx, const char* docs_path, const char* gold_path,
                         const char* out_path, char** summary_json) {
  return Guard([&] {
    Emit(sdtk::app::DistillFile(Ctx(ctx).config, Require(docs_path, "docs_path"),
                                Require(gold_path, "gold_path"), Require(out_path, "out_path")),
         summary_json);
  });
}

sdtk_status sdtk_handle_request(sdtk_context* ctx, const char* method, const char* path,
                                const char* query_json, const char* body,
                                const char* headers_json, int* http_status,
                                char** response_body) {
  return Guard([&] {
    sdtk::service::HttpRequest request;
    request.method = Require(method, "method");
    request.path = Require(path, "path");
    request.body = body ? body : "";
    const sdtk::Json query = ParseObject(query_json, "query");
    const sdtk::Json headers = ParseObject(headers_json, "headers");
    for (const auto& [k, v] : query.items()) {
      request.query[k] = v.get<std::string>();
    }
    for (const auto& [k, v] : headers.items()) {
      std::string name = k;
      for (char& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      request.headers[name] = v.get<std::string>();
    }
    const auto response = ServiceOf(Ctx(ctx)).Handle(request);
    if (http_status) *http_status = response.status;
    if (response_body) *response_body = Dup(response.body);
  });
}

sdtk_status sdtk_serve(sdtk_context* ctx, const char* host, int port) {
  return Guard([&] {
    sdtk_context& c = Ctx(ctx);
    auto& service = ServiceOf(c);
    const std::string h =
        Optional(host).value_or(c.config.GetString("service.host", "127.0.0.1"));
    if (port <= 0) port = static_cast<int>(c.config.GetInt("service.port", 8080));
    if (!service.Serve(h, port)) {
      throw sdtk::InputError("could not listen on " + h + ":" + std::to_string(port));
    }
  });
}

sdtk_status sdtk_stop(sdtk_context* ctx) {
  return Guard([&] { ServiceOf(Ctx(ctx)).Stop(); });
}

}  // extern "C"
