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

// Command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>
#include <sdtk/sdtk.h>

#include <csignal>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <unistd.h>
#include <vector>

namespace {

using Json = nlohmann::json;

struct Owned {
  char* p = nullptr;
  ~Owned() { sdtk_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct ContextDeleter {
  void operator()(sdtk_context* c) const { sdtk_context_destroy(c); }
};
using ContextPtr = std::unique_ptr<sdtk_context, ContextDeleter>;

int Report(sdtk_status status, const Owned& summary) {
  if (status != SDTK_OK) {
    Json err = Json::parse(sdtk_last_error_json(), nullptr, false);
    Json out = {{"status", "error"}, {"exit_code", static_cast<int>(status)}, {"error", err}};
    std::cerr << out.dump() << "\n";
    return static_cast<int>(status);
  }
  if (summary.p) std::cout << summary.str() << "\n";
  return 0;
}

const char* OrNull(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-disclosure detection, abstraction and evaluation toolkit", "sdtk"};
  app.set_version_flag("--version", std::string(sdtk_version()));
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--set", sets, "Config override KEY=VALUE (VALUE parsed as JSON if it can be)")
      ->type_name("KEY=VALUE");

  std::string in, out, docs, strategy, gold, pred, report, threads, dir, spans_out,
      annotator;
  std::string host;
  int port = 0;

  auto* detect = app.add_subcommand("detect", "Detect disclosure spans in documents");
  detect->add_option("--in", in, "Document JSONL")->required()->check(CLI::ExistingFile);
  detect->add_option("--out", out, "Span JSONL")->required();
  detect->add_option("--strategy", strategy, "Segmentation: sentence, word64, word128")
      ->check(CLI::IsMember({"sentence", "word64", "word128"}));

  auto* eval = app.add_subcommand("eval", "Score predicted spans against gold spans");
  eval->add_option("--pred", pred, "Predicted span JSONL")->required()->check(CLI::ExistingFile);
  eval->add_option("--gold", gold, "Gold span JSONL")->required()->check(CLI::ExistingFile);
  eval->add_option("--docs", docs, "Document JSONL; tokenizes from the texts when given")
      ->check(CLI::ExistingFile);
  eval->add_option("--report", report, "Report JSON")->required();

  auto* abstract = app.add_subcommand("abstract", "Generate three abstractions per span");
  abstract->add_option("--in", in, "Span JSONL")->required()->check(CLI::ExistingFile);
  abstract->add_option("--docs", docs, "Document JSONL")->required()->check(CLI::ExistingFile);
  abstract->add_option("--strategy", strategy, "sampling, end_to_end or iterative")
      ->check(CLI::IsMember({"sampling", "end_to_end", "iterative"}));
  abstract->add_option("--out", out, "Abstraction JSONL")->required();

  auto* rate = app.add_subcommand("rate", "Rate the importance of each span");
  rate->add_option("--in", in, "Span JSONL")->required()->check(CLI::ExistingFile);
  rate->add_option("--threads", threads, "Document JSONL holding whole threads")
      ->required()
      ->check(CLI::ExistingFile);
  rate->add_option("--out", out, "Rating JSONL")->required();

  auto* corpus = app.add_subcommand("corpus", "Corpus ingestion, filtering and splitting");
  corpus->require_subcommand(1);
  auto* brat = corpus->add_subcommand("ingest-brat", "Convert BRAT .txt/.ann pairs");
  brat->add_option("--dir", dir, "Directory of .txt/.ann pairs")
      ->required()
      ->check(CLI::ExistingDirectory);
  brat->add_option("--docs-out", out, "Document JSONL")->required();
  brat->add_option("--spans-out", spans_out, "Span JSONL")->required();
  brat->add_option("--annotator", annotator, "Annotator id");

  auto* reddit = corpus->add_subcommand("filter-reddit", "Drop NSFW, removed and non-English posts");
  reddit->add_option("--in", in, "Raw post JSONL")->required()->check(CLI::ExistingFile);
  reddit->add_option("--out", out, "Kept post JSONL")->required();

  std::size_t max_tokens = 500;
  auto* sharegpt = corpus->add_subcommand("filter-sharegpt", "Keep first-person human turns");
  sharegpt->add_option("--in", in, "Turn JSONL")->required()->check(CLI::ExistingFile);
  sharegpt->add_option("--out", out, "Kept turn JSONL")->required();
  sharegpt->add_option("--max-tokens", max_tokens, "Whitespace token limit")
      ->capture_default_str();

  std::vector<std::size_t> counts;
  std::vector<double> ratios;
  std::uint64_t seed = 0;
  bool time_ordered = false;
  std::string thread_field = "thread_id", time_field = "created_utc";
  auto* split = corpus->add_subcommand("split", "Thread-level train/dev/test split");
  split->add_option("--in", in, "Record JSONL")->required()->check(CLI::ExistingFile);
  split->add_option("--out-dir", dir, "Output directory")->required();
  auto* counts_opt = split->add_option("--counts", counts, "Thread counts: TRAIN DEV TEST")
                         ->expected(3);
  auto* ratios_opt = split->add_option("--ratios", ratios, "Thread ratios: TRAIN DEV TEST")
                         ->expected(3);
  counts_opt->excludes(ratios_opt);
  split->add_option("--seed", seed, "Shuffle seed")->capture_default_str();
  split->add_flag("--time-ordered", time_ordered, "Newest threads go to test");
  split->add_option("--thread-field", thread_field)->capture_default_str();
  split->add_option("--time-field", time_field)->capture_default_str();

  std::size_t sample_n = 0;
  bool no_dedup = false;
  auto* sample = corpus->add_subcommand("sample", "Seeded sample of records");
  sample->add_option("--in", in, "Record JSONL")->required()->check(CLI::ExistingFile);
  sample->add_option("--out", out, "Sample JSONL")->required();
  sample->add_option("-n,--count", sample_n, "Records to keep")->required();
  sample->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  sample->add_flag("--no-dedup", no_dedup, "Keep records with identical title and body");

  auto* distill = app.add_subcommand("distill", "Build a distillation corpus from gold spans");
  distill->add_option("--docs", docs, "Document JSONL")->required()->check(CLI::ExistingFile);
  distill->add_option("--gold", gold, "Gold span JSONL")->required()->check(CLI::ExistingFile);
  distill->add_option("--out", out, "Append-only corpus JSONL")->required();

  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--host", host, "Defaults to service.host, else 127.0.0.1");
  serve->add_option("--port", port, "Defaults to service.port, else 8080")
      ->check(CLI::Range(1, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(SDTK_ERR_INPUT);
  }

  Json overrides = Json::object();
  for (const std::string& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << Json{{"status", "error"},
                        {"exit_code", 2},
                        {"error", {{"kind", "input"}, {"message", "bad --set '" + kv + "'"}}}}
                       .dump()
                << "\n";
      return 2;
    }
    Json value = Json::parse(kv.substr(eq + 1), nullptr, false);
    if (value.is_discarded()) value = kv.substr(eq + 1);
    overrides[kv.substr(0, eq)] = value;
  }

  sdtk_context* raw = nullptr;
  Owned summary;
  sdtk_status status =
      sdtk_context_create(OrNull(config_path), overrides.dump().c_str(), &raw);
  if (status != SDTK_OK) return Report(status, summary);
  ContextPtr ctx(raw);

  if (detect->parsed()) {
    status = sdtk_detect_file(ctx.get(), in.c_str(), out.c_str(), OrNull(strategy), &summary.p);
  } else if (eval->parsed()) {
    Owned table;
    status = sdtk_eval_files(pred.c_str(), gold.c_str(), OrNull(docs), report.c_str(),
                             nullptr, &table.p);
    if (status == SDTK_OK) std::cout << table.str();
  } else if (abstract->parsed()) {
    status = sdtk_abstract_file(ctx.get(), in.c_str(), docs.c_str(), OrNull(strategy),
                                out.c_str(), &summary.p);
  } else if (rate->parsed()) {
    status = sdtk_rate_file(ctx.get(), in.c_str(), threads.c_str(), out.c_str(), &summary.p);
  } else if (brat->parsed()) {
    status = sdtk_corpus_ingest_brat(dir.c_str(), out.c_str(), spans_out.c_str(),
                                     OrNull(annotator), &summary.p);
  } else if (reddit->parsed()) {
    status = sdtk_corpus_filter_reddit(ctx.get(), in.c_str(), out.c_str(), &summary.p);
  } else if (sharegpt->parsed()) {
    status = sdtk_corpus_filter_sharegpt(in.c_str(), out.c_str(), max_tokens, &summary.p);
  } else if (split->parsed()) {
    Json options = {{"seed", seed},
                    {"time_ordered", time_ordered},
                    {"thread_field", thread_field},
                    {"time_field", time_field}};
    if (!counts.empty()) options["counts"] = counts;
    if (!ratios.empty()) options["ratios"] = ratios;
    status = sdtk_corpus_split(in.c_str(), dir.c_str(), options.dump().c_str(), &summary.p);
  } else if (sample->parsed()) {
    status = sdtk_corpus_sample(in.c_str(), out.c_str(), sample_n, seed, no_dedup ? 0 : 1,
                                &summary.p);
  } else if (distill->parsed()) {
    status = sdtk_distill(ctx.get(), docs.c_str(), gold.c_str(), out.c_str(), &summary.p);
  } else if (serve->parsed()) {
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);
    sdtk_status serve_status = SDTK_OK;
    std::string serve_error;
    std::thread server([&] {
      serve_status = sdtk_serve(ctx.get(), OrNull(host), port);
      if (serve_status != SDTK_OK) {
        serve_error = sdtk_last_error_json();
        kill(getpid(), SIGTERM);
      }
    });
    int sig = 0;
    sigwait(&signals, &sig);
    sdtk_stop(ctx.get());
    server.join();
    if (serve_status != SDTK_OK) {
      std::cerr << Json{{"status", "error"},
                        {"exit_code", static_cast<int>(serve_status)},
                        {"error", Json::parse(serve_error, nullptr, false)}}
                       .dump()
                << "\n";
      return static_cast<int>(serve_status);
    }
  }
  return Report(status, summary);
}
