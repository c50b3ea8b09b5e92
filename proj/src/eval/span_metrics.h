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

#ifndef SDTK_EVAL_SPAN_METRICS_H_
#define SDTK_EVAL_SPAN_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/category.h"
#include "core/span.h"
#include "core/types.h"

namespace sdtk::eval {

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold count
  std::size_t true_positives = 0;
  std::size_t predicted = 0;
};

// Undefined ratios (zero denominators) are reported as 0.
PRF MakePRF(std::size_t true_positives, std::size_t predicted,
            std::size_t gold);

// pred and gold contain one another and share more than half of the longer
// span's length.
bool PartialMatch(SpanRange pred, SpanRange gold);

enum class MatchMode { kExact, kPartial };

bool Matches(SpanRange pred, SpanRange gold, MatchMode mode);

// Size of a maximum one-to-one matching between `pred` and `gold` under
// `mode`.
std::size_t CountMatches(std::span<const SpanRange> pred,
                         std::span<const SpanRange> gold, MatchMode mode);

struct ClassScores {
  std::map<Category, PRF> per_class;  // every class seen on either side
  // Unweighted mean F1 over classes with gold support. Empty when there is
  // no gold span at all.
  std::optional<double> average_f1;
};

// Scores are pooled per class across documents; matching is per document.
ClassScores SpanPrf(std::span<const DisclosureSpan> pred,
                    std::span<const DisclosureSpan> gold, MatchMode mode);

// Per-token class labels of one document; nullopt is O.
using TokenLabels = std::vector<std::optional<Category>>;

// Labels `tokens` from `spans`: a token takes the category of the first
// span (by start) that it intersects.
TokenLabels LabelTokens(std::span<const SpanRange> tokens,
                        std::span<const DisclosureSpan> spans);

struct TokenizedPair {
  std::string doc_id;
  TokenLabels pred;
  TokenLabels gold;
};

// Token-level scores per class; O is never a class. Throws InputError if a
// document's sequences differ in length.
ClassScores TokenPrf(std::span<const TokenizedPair> docs);

}  // namespace sdtk::eval

#endif  // SDTK_EVAL_SPAN_METRICS_H_
