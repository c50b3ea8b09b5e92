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

#ifndef SDTK_EVAL_REPORT_H_
#define SDTK_EVAL_REPORT_H_

#include <map>
#include <span>
#include <string>

#include "core/records.h"
#include "core/types.h"
#include "eval/span_metrics.h"

namespace sdtk::eval {

struct EvalReport {
  ClassScores exact;
  ClassScores partial;
  ClassScores token;
  std::size_t num_documents = 0;
  Json metadata;
};

// Full span and token evaluation. With `doc_texts` (doc id -> text) tokens
// come from TokenizeWords over each document and every span is checked
// against its text. Without it, each document's tokenization is rebuilt from
// the text snapshots of its pred and gold spans; characters no span covers
// are outside every class anyway.
EvalReport Evaluate(std::span<const DisclosureSpan> pred,
                    std::span<const DisclosureSpan> gold,
                    const std::map<std::string, std::string>* doc_texts = nullptr);

Json ToJson(const PRF& prf);
Json ToJson(const ClassScores& scores);
Json ToJson(const EvalReport& report);

// Plain-text table: Class (#spans) | Span F1 | Partial F1 | Token F1, one row
// per gold class, then the Average row. Values are percentages.
std::string FormatTable(const EvalReport& report);

}  // namespace sdtk::eval

#endif  // SDTK_EVAL_REPORT_H_
