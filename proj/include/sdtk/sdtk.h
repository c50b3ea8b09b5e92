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

/* C interface to the self-disclosure toolkit.
 *
 * Every function returns an sdtk_status. On failure, sdtk_last_error() holds
 * a message and sdtk_last_error_json() a {"kind", "message"} object for the
 * calling thread until its next API call. Strings returned through char**
 * out-parameters are owned by the caller and released with sdtk_free().
 * Offsets are Unicode code points. Contexts may be shared between threads.
 */
#ifndef SDTK_SDTK_H_
#define SDTK_SDTK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SDTK_API __declspec(dllexport)
#else
#define SDTK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdtk_status {
  SDTK_OK = 0,
  SDTK_ERR_INTERNAL = 1,
  SDTK_ERR_INPUT = 2,    /* bad input, schema or range violation */
  SDTK_ERR_PLUGIN = 3,   /* unknown or failing detection plugin */
  SDTK_ERR_PROVIDER = 4  /* LLM provider failure */
} sdtk_status;

typedef struct sdtk_context sdtk_context;

SDTK_API const char* sdtk_version(void);
SDTK_API const char* sdtk_last_error(void);
SDTK_API const char* sdtk_last_error_json(void);
SDTK_API void sdtk_free(char* s);

/* `config_path` (a JSON config file) and `overrides_json` (an object of
 * dotted keys) may each be NULL. SDTK_* environment variables are applied
 * after the file and before the overrides. */
SDTK_API sdtk_status sdtk_context_create(const char* config_path,
                                         const char* overrides_json,
                                         sdtk_context** out);
SDTK_API void sdtk_context_destroy(sdtk_context* ctx);

/* Detection over one draft. Writes {"spans", "model_versions"}. */
SDTK_API sdtk_status sdtk_detect_text(sdtk_context* ctx, const char* text,
                                      char** out_json);

/* Writes {"new_text", "new_end"}. */
SDTK_API sdtk_status sdtk_apply_edit(const char* text, size_t start, size_t end,
                                     const char* replacement, char** out_json);

/* File operations. Each writes a JSON summary to `summary_json` when it is
 * not NULL. Optional path arguments may be NULL. */
SDTK_API sdtk_status sdtk_detect_file(sdtk_context* ctx, const char* docs_path,
                                      const char* out_path, const char* strategy,
                                      char** summary_json);
/* `table_text` receives the exact/partial/token tables. */
SDTK_API sdtk_status sdtk_eval_files(const char* pred_path, const char* gold_path,
                                     const char* docs_path, const char* report_path,
                                     char** summary_json, char** table_text);
SDTK_API sdtk_status sdtk_abstract_file(sdtk_context* ctx, const char* spans_path,
                                        const char* docs_path, const char* strategy,
                                        const char* out_path, char** summary_json);
SDTK_API sdtk_status sdtk_rate_file(sdtk_context* ctx, const char* spans_path,
                                    const char* threads_path, const char* out_path,
                                    char** summary_json);
SDTK_API sdtk_status sdtk_corpus_ingest_brat(const char* dir, const char* docs_out,
                                             const char* spans_out,
                                             const char* annotator_id,
                                             char** summary_json);
SDTK_API sdtk_status sdtk_corpus_filter_reddit(sdtk_context* ctx, const char* in_path,
                                               const char* out_path,
                                               char** summary_json);
SDTK_API sdtk_status sdtk_corpus_filter_sharegpt(const char* in_path,
                                                 const char* out_path,
                                                 size_t max_tokens,
                                                 char** summary_json);
/* `options_json`: {"counts": [train, dev, test]} or {"ratios": [...]}, plus
 * optional "seed", "time_ordered", "thread_field", "time_field". */
SDTK_API sdtk_status sdtk_corpus_split(const char* in_path, const char* out_dir,
                                       const char* options_json,
                                       char** summary_json);
SDTK_API sdtk_status sdtk_corpus_sample(const char* in_path, const char* out_path,
                                        size_t n, uint64_t seed, int dedup,
                                        char** summary_json);
SDTK_API sdtk_status sdtk_distill(sdtk_context* ctx, const char* docs_path,
                                  const char* gold_path, const char* out_path,
                                  char** summary_json);

/* One HTTP exchange without a socket. `query_json` and `headers_json` are
 * objects of strings and may be NULL. */
SDTK_API sdtk_status sdtk_handle_request(sdtk_context* ctx, const char* method,
                                         const char* path, const char* query_json,
                                         const char* body, const char* headers_json,
                                         int* http_status, char** response_body);

/* Serves the HTTP API until sdtk_stop() is called from another thread. A NULL
 * host or non-positive port falls back to service.host / service.port. */
SDTK_API sdtk_status sdtk_serve(sdtk_context* ctx, const char* host, int port);
SDTK_API sdtk_status sdtk_stop(sdtk_context* ctx);

#ifdef __cplusplus
}
#endif

#endif /* SDTK_SDTK_H_ */
