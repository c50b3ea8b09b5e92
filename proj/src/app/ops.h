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

#ifndef SDTK_APP_OPS_H_
#define SDTK_APP_OPS_H_

#include <optional>
#include <string>

#include "core/config.h"
#include "core/records.h"
#include "corpus/split.h"

// File-to-file batch operations behind the C API and the command line. Each
// returns a JSON summary and writes its outputs atomically.
namespace sdtk::app {

// docs.jsonl -> spans.jsonl. `strategy` overrides detection.strategy.
Json DetectFile(const Config& config, const std::string& in_path,
                const std::string& out_path,
                const std::optional<std::string>& strategy = std::nullopt);

// Writes the JSON report and returns it; `table` receives the text tables.
Json EvalFiles(const std::string& pred_path, const std::string& gold_path,
               const std::optional<std::string>& docs_path,
               const std::string& report_path, std::string* table = nullptr);

// spans.jsonl + docs.jsonl -> abstractions.jsonl. Spans that end up with
// fewer than three valid candidates are written with "complete": false.
Json AbstractFile(const Config& config, const std::string& spans_path,
                  const std::string& docs_path, const std::string& strategy,
                  const std::string& out_path);

// spans.jsonl + thread documents -> ratings.jsonl.
Json RateFile(const Config& config, const std::string& spans_path,
              const std::string& threads_path, const std::string& out_path);

Json IngestBrat(const std::string& dir, const std::string& docs_out,
                const std::string& spans_out, const std::string& annotator_id);

Json FilterRedditFile(const Config& config, const std::string& in_path,
                      const std::string& out_path);

Json FilterShareGptFile(const std::string& in_path, const std::string& out_path,
                        std::size_t max_tokens = 500);

// Writes train.jsonl, dev.jsonl and test.jsonl under `out_dir`.
Json SplitFile(const std::string& in_path, const std::string& out_dir,
               const corpus::SplitOptions& options);

Json SampleFile(const std::string& in_path, const std::string& out_path,
                const corpus::SampleOptions& options);

// Gold spans over docs -> append-only distillation corpus. Throws
// ProviderError when the teacher fails, after keeping what was written.
Json DistillFile(const Config& config, const std::string& docs_path,
                 const std::string& gold_path, const std::string& out_path);

}  // namespace sdtk::app

#endif  // SDTK_APP_OPS_H_
