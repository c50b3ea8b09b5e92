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

#ifndef SDTK_ABSTRACT_GENERATE_H_
#define SDTK_ABSTRACT_GENERATE_H_

#include <string>
#include <vector>

#include "core/config.h"
#include "core/types.h"
#include "llm/client.h"

namespace sdtk::abstract {

// A sentence of a document: its text and where it starts (code points).
struct SentenceContext {
  std::string text;
  std::size_t offset = 0;
};

// The sentence containing `span`, found with the default sentence splitter.
// Throws InputError when the span crosses a sentence boundary and RangeError
// when it does not fit the document.
SentenceContext LocateSentence(std::string_view doc_text,
                               const DisclosureSpan& span);

struct GenerateOptions {
  Strategy strategy = Strategy::kEndToEnd;
  int n = 3;
  bool with_thought = false;
  double sampling_temperature = 0.7;
  double temperature = 0.3;  // end_to_end and iterative

  // abstract.with_thought, abstract.sampling_temperature, abstract.temperature.
  static GenerateOptions FromConfig(const Config& config, Strategy strategy);
};

// Template id used for a strategy, e.g. "three_span_e2e_thought".
std::string TemplateFor(Strategy strategy, bool with_thought);

// Produces `n` abstractions for `span`, whose offsets are relative to the
// document that `sentence` comes from.
//   sampling    n completions of the one-span prompt;
//   end_to_end  one completion of the three-span prompt;
//   iterative   n completions, each listing the candidates so far.
// Every candidate is validated. A rejected or unparseable candidate is
// regenerated once (for end_to_end the single prompt is re-issued once).
// Throws PartialResultError carrying the valid candidates when fewer than n
// survive, and ProviderError when the provider fails.
AbstractionSet GenerateAbstractions(const DisclosureSpan& span,
                                    const SentenceContext& sentence,
                                    const GenerateOptions& options,
                                    llm::LlmClient& client);

struct DistillRecord {
  std::string sentence;
  std::size_t span_start = 0;  // within sentence
  std::size_t span_end = 0;
  std::string span_text;
  std::string rationale;
  std::vector<std::string> candidates;
  std::string teacher_id;
  std::string template_id;
};

Json ToJson(const DistillRecord& record);
DistillRecord DistillRecordFromJson(const Json& j);

struct DistillSummary {
  std::size_t written = 0;
  std::size_t already_present = 0;
  std::size_t skipped = 0;  // unparseable output or unusable span
  std::vector<std::string> errors;
  std::optional<std::string> provider_error;  // set when the run stopped early
};

// Appends one record per gold span to the JSONL file at `out_path`, asking
// the teacher with the distill_teacher prompt at temperature 0. Records whose
// (sentence, span_start, span_end) already appear in the file are not
// regenerated; a torn final line left by an interrupted run is dropped.
// Provider failure stops the run with the corpus written so far.
DistillSummary BuildDistillationCorpus(const std::vector<Document>& docs,
                                       const std::vector<DisclosureSpan>& gold,
                                       llm::LlmClient& teacher,
                                       const std::string& out_path);

}  // namespace sdtk::abstract

#endif  // SDTK_ABSTRACT_GENERATE_H_
