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

#include "abstract/generate.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <tuple>

#include "abstract/parse.h"
#include "abstract/prompt.h"
#include "abstract/validate.h"
#include "core/errors.h"
#include "core/jsonl.h"
#include "core/unicode.h"
#include "detect/segment.h"
#include "spdlog/spdlog.h"

namespace sdtk::abstract {
namespace {

struct Attempt {
  std::optional<std::string> candidate;
  std::optional<std::string> rationale;
  ValidationReport report;
};

Attempt TrySingle(llm::LlmClient& client, const std::string& template_id,
                  const Bindings& bindings, double temperature, int sample,
                  const std::string& sentence, SpanRange local) {
  Attempt a;
  const std::string raw = client.Complete(
      client.MakeRequest(template_id, BuildPrompt(template_id, bindings),
                         temperature, sample));
  try {
    ParsedCandidate parsed = ParseSingleCandidate(raw);
    a.report = ValidateAbstraction(sentence, local, parsed.candidate);
    a.candidate = std::move(parsed.candidate);
    a.rationale = std::move(parsed.rationale);
  } catch (const ParseError& e) {
    spdlog::warn("abstraction output rejected: {}", e.what());
  }
  return a;
}

std::string ListForError(const std::vector<std::string>& valid) {
  std::string out;
  for (const std::string& v : valid) out += (out.empty() ? "" : "; ") + v;
  return out.empty() ? "none" : out;
}

}  // namespace

SentenceContext LocateSentence(std::string_view doc_text,
                               const DisclosureSpan& span) {
  CheckSpan(span, doc_text);
  const auto sentences = detect::DefaultSentenceSplitter().Split(doc_text);
  for (const SpanRange& s : sentences) {
    if (s.start <= span.start && span.end <= s.end) {
      return {unicode::Substr(doc_text, s.start, s.end), s.start};
    }
  }
  throw InputError("span [" + std::to_string(span.start) + ", " +
                   std::to_string(span.end) + ") of '" + span.doc_id +
                   "' crosses a sentence boundary");
}

GenerateOptions GenerateOptions::FromConfig(const Config& config,
                                            Strategy strategy) {
  GenerateOptions o;
  o.strategy = strategy;
  o.with_thought = config.GetBool("abstract.with_thought", false);
  o.sampling_temperature =
      config.GetDouble("abstract.sampling_temperature", o.sampling_temperature);
  o.temperature = config.GetDouble("abstract.temperature", o.temperature);
  return o;
}

std::string TemplateFor(Strategy strategy, bool with_thought) {
  std::string id;
  switch (strategy) {
    case Strategy::kSampling:
      id = "one_span";
      break;
    case Strategy::kEndToEnd:
      id = "three_span_e2e";
      break;
    case Strategy::kIterative:
      id = "iterative";
      break;
  }
  return with_thought ? id + "_thought" : id;
}

AbstractionSet GenerateAbstractions(const DisclosureSpan& span,
                                    const SentenceContext& sentence,
                                    const GenerateOptions& options,
                                    llm::LlmClient& client) {
  if (options.n <= 0) throw InputError("n must be positive");
  const std::size_t len = unicode::CodepointCount(sentence.text);
  if (span.start < sentence.offset || span.end > sentence.offset + len ||
      span.start >= span.end) {
    throw InputError("span does not lie within the sentence");
  }
  const SpanRange local{span.start - sentence.offset, span.end - sentence.offset};
  const std::string span_text = unicode::Substr(sentence.text, local.start, local.end);
  if (!span.text.empty() && span.text != span_text) {
    throw RangeError("span snapshot does not match the sentence text");
  }

  AbstractionSet set;
  set.span = span;
  set.strategy = options.strategy;
  const std::string template_id = TemplateFor(options.strategy, options.with_thought);
  Bindings bindings = {{"sentence", sentence.text}, {"span", span_text}};
  std::vector<std::string> valid;
  std::vector<ValidationReport> reports;

  auto keep = [&](Attempt& a) {
    if (!set.rationale && a.rationale) set.rationale = a.rationale;
    valid.push_back(*a.candidate);
    reports.push_back(a.report);
  };

  switch (options.strategy) {
    case Strategy::kSampling: {
      int sample = 0;
      for (int i = 0; i < options.n; ++i) {
        for (int attempt = 0; attempt < 2; ++attempt) {
          Attempt a = TrySingle(client, template_id, bindings,
                                options.sampling_temperature, sample++,
                                sentence.text, local);
          if (a.candidate && a.report.accepted()) {
            keep(a);
            break;
          }
        }
      }
      break;
    }
    case Strategy::kIterative: {
      for (int i = 0; i < options.n; ++i) {
        bindings["examples"] = FormatExamples(valid);
        for (int attempt = 0; attempt < 2; ++attempt) {
          Attempt a = TrySingle(client, template_id, bindings, options.temperature,
                                attempt, sentence.text, local);
          if (a.candidate && a.report.accepted()) {
            keep(a);
            break;
          }
        }
      }
      break;
    }
    case Strategy::kEndToEnd: {
      const std::string prompt = BuildPrompt(template_id, bindings);
      for (int attempt = 0; attempt < 2 && valid.size() < std::size_t(options.n);
           ++attempt) {
        const std::string raw = client.Complete(
            client.MakeRequest(template_id, prompt, options.temperature, attempt));
        ParsedCandidates parsed;
        try {
          parsed = ParseCandidates(raw, options.n);
        } catch (const ParseError& e) {
          spdlog::warn("abstraction output rejected: {}", e.what());
          continue;
        }
        if (!set.rationale) set.rationale = parsed.rationale;
        for (const std::string& c : parsed.candidates) {
          if (valid.size() >= std::size_t(options.n)) break;
          if (attempt > 0 && std::find(valid.begin(), valid.end(), c) != valid.end()) {
            continue;
          }
          ValidationReport r = ValidateAbstraction(sentence.text, local, c);
          if (!r.accepted()) continue;
          valid.push_back(c);
          reports.push_back(r);
        }
      }
      break;
    }
  }

  if (valid.size() < std::size_t(options.n)) {
    throw PartialResultError("only " + std::to_string(valid.size()) + " of " +
                                 std::to_string(options.n) +
                                 " abstractions passed validation: " +
                                 ListForError(valid),
                             valid);
  }
  FlagNearDuplicates(valid, &reports);
  set.candidates = std::move(valid);
  set.per_candidate_validation = std::move(reports);
  return set;
}

Json ToJson(const DistillRecord& r) {
  return {{"sentence", r.sentence},     {"span_start", r.span_start},
          {"span_end", r.span_end},     {"span_text", r.span_text},
          {"rationale", r.rationale},   {"candidates", r.candidates},
          {"teacher_id", r.teacher_id}, {"template_id", r.template_id}};
}

DistillRecord DistillRecordFromJson(const Json& j) {
  DistillRecord r;
  r.sentence = RequireString(j, "sentence");
  r.span_start = RequireIndex(j, "span_start");
  r.span_end = RequireIndex(j, "span_end");
  r.span_text = RequireString(j, "span_text");
  r.rationale = OptionalString(j, "rationale").value_or("");
  const Json& c = RequireField(j, "candidates");
  if (!c.is_array() || c.size() != 3) throw ParseError("'candidates' must hold 3 strings");
  for (const Json& v : c) {
    if (!v.is_string()) throw ParseError("'candidates' must hold 3 strings");
    r.candidates.push_back(v.get<std::string>());
  }
  r.teacher_id = RequireString(j, "teacher_id");
  r.template_id = RequireString(j, "template_id");
  if (r.span_start >= r.span_end ||
      unicode::Substr(r.sentence, r.span_start, r.span_end) != r.span_text) {
    throw ParseError("span_text does not match sentence[span_start:span_end]");
  }
  return r;
}

DistillSummary BuildDistillationCorpus(const std::vector<Document>& docs,
                                       const std::vector<DisclosureSpan>& gold,
                                       llm::LlmClient& teacher,
                                       const std::string& out_path) {
  using Key = std::tuple<std::string, std::size_t, std::size_t>;
  DistillSummary summary;
  std::set<Key> present;

  // Keep complete lines from an earlier run; drop a torn tail.
  std::string existing;
  if (std::filesystem::exists(out_path)) existing = ReadFile(out_path);
  std::size_t good_end = 0;
  std::size_t pos = 0;
  while (pos < existing.size()) {
    const std::size_t nl = existing.find('\n', pos);
    if (nl == std::string::npos) break;
    const std::string_view line(existing.data() + pos, nl - pos);
    if (!line.empty()) {
      try {
        const DistillRecord r = DistillRecordFromJson(Json::parse(line));
        present.insert({r.sentence, r.span_start, r.span_end});
      } catch (const std::exception&) {
        break;
      }
    }
    good_end = nl + 1;
    pos = nl + 1;
  }
  if (good_end != existing.size()) {
    spdlog::warn("{}: dropping {} bytes of incomplete output", out_path,
                 existing.size() - good_end);
    std::filesystem::resize_file(out_path, good_end);
  }
  if (!std::filesystem::exists(out_path)) WriteFileAtomic(out_path, "");

  std::map<std::string, const Document*> by_id;
  for (const Document& d : docs) by_id[d.id] = &d;

  std::ofstream out(out_path, std::ios::app | std::ios::binary);
  if (!out) throw InputError("cannot open " + out_path + " for appending");
  const std::string template_id = "distill_teacher";

  for (const DisclosureSpan& span : gold) {
    auto doc = by_id.find(span.doc_id);
    if (doc == by_id.end()) {
      summary.errors.push_back("no document '" + span.doc_id + "'");
      ++summary.skipped;
      continue;
    }
    SentenceContext sentence;
    try {
      sentence = LocateSentence(doc->second->text, span);
    } catch (const Error& e) {
      summary.errors.push_back(e.what());
      ++summary.skipped;
      continue;
    }
    const std::size_t local_start = span.start - sentence.offset;
    const std::size_t local_end = span.end - sentence.offset;
    if (present.count({sentence.text, local_start, local_end})) {
      ++summary.already_present;
      continue;
    }

    const std::string span_text = unicode::Substr(sentence.text, local_start, local_end);
    std::string raw;
    try {
      raw = teacher.Complete(teacher.MakeRequest(
          template_id,
          BuildPrompt(template_id, {{"sentence", sentence.text}, {"span", span_text}}),
          0.0));
    } catch (const ProviderError& e) {
      summary.provider_error = e.what();
      break;
    }
    try {
      ParsedCandidates parsed = ParseCandidates(raw, 3);
      for (const std::string& c : parsed.candidates) {
        if (c.empty()) throw ParseError("empty candidate");
      }
      DistillRecord record{sentence.text,
                           local_start,
                           local_end,
                           span_text,
                           parsed.rationale.value_or(""),
                           parsed.candidates,
                           teacher.model_id(),
                           template_id};
      out << ToJson(record).dump() << '\n';
      out.flush();
      present.insert({record.sentence, local_start, local_end});
      ++summary.written;
    } catch (const ParseError& e) {
      spdlog::warn("distill: skipping span [{}, {}) of '{}': {}", span.start,
                   span.end, span.doc_id, e.what());
      summary.errors.push_back(span.doc_id + ": " + e.what());
      ++summary.skipped;
    }
  }
  return summary;
}

}  // namespace sdtk::abstract
