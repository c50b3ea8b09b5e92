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

#include "app/ops.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <thread>

#include "abstract/generate.h"
#include "core/errors.h"
#include "core/jsonl.h"
#include "corpus/brat.h"
#include "corpus/filters.h"
#include "detect/pipeline.h"
#include "eval/report.h"
#include "importance/importance.h"
#include "llm/client.h"

namespace sdtk::app {
namespace {

// Runs fn(i) for i in [0, n) on up to `workers` threads. The first exception
// (lowest index) is rethrown after all workers stop.
template <typename Fn>
void ParallelFor(std::size_t n, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::size_t error_index = n;
  std::exception_ptr error;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; !failed && (i = next++) < n;) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(mu);
            failed = true;
            if (i < error_index) {
              error_index = i;
              error = std::current_exception();
            }
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

unsigned Workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::map<std::string, const Document*> IndexDocs(const std::vector<Document>& docs) {
  std::map<std::string, const Document*> index;
  for (const Document& d : docs) {
    if (!index.emplace(d.id, &d).second) throw InputError("duplicate document id '" + d.id + "'");
  }
  return index;
}

const Document& FindDoc(const std::map<std::string, const Document*>& index,
                        const std::string& id) {
  auto it = index.find(id);
  if (it == index.end()) throw InputError("span refers to unknown document '" + id + "'");
  return *it->second;
}

}  // namespace

Json DetectFile(const Config& config, const std::string& in_path,
                const std::string& out_path, const std::optional<std::string>& strategy) {
  Config effective = config;
  if (strategy) effective.Set("detection.strategy", *strategy);
  const auto pipeline = detect::DetectionPipeline::Create(effective);
  const auto docs = ReadDocuments(in_path);
  IndexDocs(docs);
  std::vector<std::vector<DisclosureSpan>> per_doc(docs.size());
  ParallelFor(docs.size(), Workers(), [&](std::size_t i) {
    if (!docs[i].text.empty()) per_doc[i] = pipeline->Detect(docs[i]).spans;
  });
  std::vector<Json> out;
  std::map<std::string, std::size_t> per_category;
  for (const auto& spans : per_doc) {
    for (const DisclosureSpan& s : spans) {
      out.push_back(ToJson(s));
      ++per_category[std::string(CategoryName(s.category))];
    }
  }
  WriteJsonlAtomic(out_path, out);
  return {{"documents", docs.size()},
          {"spans", out.size()},
          {"per_category", per_category},
          {"model_versions", pipeline->ModelVersions()}};
}

Json EvalFiles(const std::string& pred_path, const std::string& gold_path,
               const std::optional<std::string>& docs_path,
               const std::string& report_path, std::string* table) {
  const auto pred = ReadSpans(pred_path);
  const auto gold = ReadSpans(gold_path);
  std::map<std::string, std::string> texts;
  if (docs_path) {
    for (Document& d : ReadDocuments(*docs_path)) texts.emplace(d.id, std::move(d.text));
  }
  const eval::EvalReport report = eval::Evaluate(pred, gold, docs_path ? &texts : nullptr);
  Json j = eval::ToJson(report);
  WriteFileAtomic(report_path, j.dump(2) + "\n");
  if (table) *table = eval::FormatTable(report);
  return j;
}

Json AbstractFile(const Config& config, const std::string& spans_path,
                  const std::string& docs_path, const std::string& strategy_name,
                  const std::string& out_path) {
  const Strategy strategy = ParseStrategy(strategy_name);
  const auto options = abstract::GenerateOptions::FromConfig(config, strategy);
  const auto spans = ReadSpans(spans_path);
  const auto docs = ReadDocuments(docs_path);
  const auto index = IndexDocs(docs);
  auto client = llm::LlmClient::Create(config);

  std::vector<Json> out(spans.size());
  std::atomic<std::size_t> incomplete{0};
  ParallelFor(spans.size(), Workers(), [&](std::size_t i) {
    const Document& doc = FindDoc(index, spans[i].doc_id);
    const auto sentence = abstract::LocateSentence(doc.text, spans[i]);
    try {
      out[i] = ToJson(abstract::GenerateAbstractions(spans[i], sentence, options, *client));
      out[i]["complete"] = true;
    } catch (const PartialResultError& e) {
      AbstractionSet partial;
      partial.span = spans[i];
      partial.candidates = e.valid();
      partial.strategy = strategy;
      out[i] = ToJson(partial);
      out[i]["complete"] = false;
      ++incomplete;
      spdlog::warn("span {} [{}, {}): {}", spans[i].doc_id, spans[i].start, spans[i].end,
                   e.what());
    }
  });
  WriteJsonlAtomic(out_path, out);
  return {{"spans", spans.size()},
          {"complete", spans.size() - incomplete},
          {"incomplete", incomplete.load()},
          {"template", abstract::TemplateFor(strategy, options.with_thought)},
          {"model_id", client->model_id()},
          {"provider_calls", client->provider_calls()}};
}

Json RateFile(const Config& config, const std::string& spans_path,
              const std::string& threads_path, const std::string& out_path) {
  const auto spans = ReadSpans(spans_path);
  const auto docs = ReadDocuments(threads_path);
  const auto index = IndexDocs(docs);
  std::map<std::string, std::vector<Document>> threads;
  for (const Document& d : docs) threads[d.thread_id].push_back(d);
  const bool with_thought = config.GetBool("importance.with_thought", false);
  const int attempts = static_cast<int>(config.GetInt("importance.max_attempts", 3));
  auto client = llm::LlmClient::Create(config);

  std::vector<Json> out(spans.size());
  ParallelFor(spans.size(), Workers(), [&](std::size_t i) {
    const Document& doc = FindDoc(index, spans[i].doc_id);
    const auto context = importance::AssembleContext(spans[i], threads.at(doc.thread_id));
    out[i] = ToJson(importance::RateImportance(context, *client, with_thought, attempts));
  });
  WriteJsonlAtomic(out_path, out);
  std::map<std::string, std::size_t> levels;
  for (const Json& r : out) ++levels[r.at("level").get<std::string>()];
  return {{"spans", spans.size()},
          {"levels", levels},
          {"model_id", client->model_id()},
          {"provider_calls", client->provider_calls()}};
}

Json IngestBrat(const std::string& dir, const std::string& docs_out,
                const std::string& spans_out, const std::string& annotator_id) {
  const auto brat = corpus::ReadBratDirectory(dir, annotator_id);
  std::vector<Json> docs, spans;
  for (const auto& b : brat) {
    docs.push_back(ToJson(b.doc));
    for (const DisclosureSpan& s : b.annotations.spans) spans.push_back(ToJson(s));
  }
  WriteJsonlAtomic(docs_out, docs);
  WriteJsonlAtomic(spans_out, spans);
  return {{"documents", docs.size()}, {"spans", spans.size()}};
}

Json FilterRedditFile(const Config& config, const std::string& in_path,
                      const std::string& out_path) {
  const auto langid = corpus::MakeLanguageIdentifier(config);
  corpus::FilterReport report;
  const auto kept = corpus::FilterPosts(ReadJsonl(in_path), *langid, &report);
  WriteJsonlAtomic(out_path, kept);
  Json j = report.ToJson();
  j["langid"] = langid->name();
  return j;
}

Json FilterShareGptFile(const std::string& in_path, const std::string& out_path,
                        std::size_t max_tokens) {
  corpus::FilterReport report;
  const auto kept = corpus::FilterShareGpt(ReadJsonl(in_path), &report, max_tokens);
  WriteJsonlAtomic(out_path, kept);
  return report.ToJson();
}

Json SplitFile(const std::string& in_path, const std::string& out_dir,
               const corpus::SplitOptions& options) {
  const auto result = corpus::SplitDataset(ReadJsonl(in_path), options);
  std::filesystem::create_directories(out_dir);
  Json summary = {{"unassigned_threads", result.unassigned_threads},
                  {"unassigned_records", result.unassigned_records},
                  {"seed", options.seed},
                  {"time_ordered", options.time_ordered}};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string name = corpus::kSplitNames[i];
    WriteJsonlAtomic((std::filesystem::path(out_dir) / (name + ".jsonl")).string(),
                     result.parts[i]);
    summary[name] = {{"threads", result.thread_counts[i]}, {"records", result.parts[i].size()}};
  }
  return summary;
}

Json SampleFile(const std::string& in_path, const std::string& out_path,
                const corpus::SampleOptions& options) {
  const auto records = ReadJsonl(in_path);
  std::size_t duplicates = 0;
  const auto sample = corpus::SampleRecords(records, options, &duplicates);
  WriteJsonlAtomic(out_path, sample);
  return {{"input", records.size()},
          {"duplicates_dropped", duplicates},
          {"sampled", sample.size()},
          {"seed", options.seed}};
}

Json DistillFile(const Config& config, const std::string& docs_path,
                 const std::string& gold_path, const std::string& out_path) {
  const auto docs = ReadDocuments(docs_path);
  const auto gold = ReadSpans(gold_path);
  auto teacher = llm::LlmClient::Create(config);
  const auto summary = abstract::BuildDistillationCorpus(docs, gold, *teacher, out_path);
  Json j = {{"written", summary.written},
            {"already_present", summary.already_present},
            {"skipped", summary.skipped},
            {"errors", summary.errors},
            {"teacher", teacher->model_id()}};
  if (summary.provider_error) {
    throw ProviderError(ProviderFailure::kExhausted,
                        *summary.provider_error + " (" + j.dump() + ")");
  }
  return j;
}

}  // namespace sdtk::app
