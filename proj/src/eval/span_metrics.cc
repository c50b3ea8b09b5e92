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

#include "eval/span_metrics.h"

#include <algorithm>
#include <functional>
#include <tuple>

#include "core/errors.h"

namespace sdtk::eval {
namespace {

struct Counts {
  std::size_t tp = 0;
  std::size_t pred = 0;
  std::size_t gold = 0;
};

ClassScores Finish(const std::map<Category, Counts>& counts) {
  ClassScores out;
  double sum = 0.0;
  int n = 0;
  for (const auto& [category, c] : counts) {
    out.per_class[category] = MakePRF(c.tp, c.pred, c.gold);
    if (c.gold > 0) {
      sum += out.per_class[category].f1;
      ++n;
    }
  }
  if (n > 0) out.average_f1 = sum / n;
  return out;
}

}  // namespace

PRF MakePRF(std::size_t true_positives, std::size_t predicted,
            std::size_t gold) {
  PRF prf;
  prf.true_positives = true_positives;
  prf.predicted = predicted;
  prf.support = gold;
  if (predicted > 0) prf.precision = double(true_positives) / predicted;
  if (gold > 0) prf.recall = double(true_positives) / gold;
  if (prf.precision + prf.recall > 0) {
    prf.f1 = 2 * prf.precision * prf.recall / (prf.precision + prf.recall);
  }
  return prf;
}

bool PartialMatch(SpanRange pred, SpanRange gold) {
  if (!ContainsRelation(pred, gold)) return false;
  const std::size_t longer = std::max(pred.length(), gold.length());
  // overlap > longer / 2, kept in integers.
  return 2 * OverlapLen(pred, gold) > longer;
}

bool Matches(SpanRange pred, SpanRange gold, MatchMode mode) {
  return mode == MatchMode::kExact ? pred == gold : PartialMatch(pred, gold);
}

std::size_t CountMatches(std::span<const SpanRange> pred,
                         std::span<const SpanRange> gold, MatchMode mode) {
  // Maximum bipartite matching by augmenting paths (Kuhn).
  std::vector<std::vector<std::size_t>> edges(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = 0; j < gold.size(); ++j) {
      if (Matches(pred[i], gold[j], mode)) edges[i].push_back(j);
    }
  }
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> gold_match(gold.size(), kFree);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j : edges[i]) {
      if (visited[j]) continue;
      visited[j] = 1;
      if (gold_match[j] == kFree || augment(gold_match[j])) {
        gold_match[j] = i;
        return true;
      }
    }
    return false;
  };
  std::size_t matched = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (edges[i].empty()) continue;
    visited.assign(gold.size(), 0);
    if (augment(i)) ++matched;
  }
  return matched;
}

ClassScores SpanPrf(std::span<const DisclosureSpan> pred,
                    std::span<const DisclosureSpan> gold, MatchMode mode) {
  using Key = std::pair<std::string, Category>;
  std::map<Key, std::pair<std::vector<SpanRange>, std::vector<SpanRange>>> groups;
  for (const DisclosureSpan& s : pred) {
    groups[{s.doc_id, s.category}].first.push_back(s.range());
  }
  for (const DisclosureSpan& s : gold) {
    groups[{s.doc_id, s.category}].second.push_back(s.range());
  }
  std::map<Category, Counts> counts;
  for (const auto& [key, sides] : groups) {
    Counts& c = counts[key.second];
    c.pred += sides.first.size();
    c.gold += sides.second.size();
    c.tp += CountMatches(sides.first, sides.second, mode);
  }
  return Finish(counts);
}

TokenLabels LabelTokens(std::span<const SpanRange> tokens,
                        std::span<const DisclosureSpan> spans) {
  std::vector<const DisclosureSpan*> sorted;
  for (const DisclosureSpan& s : spans) sorted.push_back(&s);
  std::sort(sorted.begin(), sorted.end(),
            [](const DisclosureSpan* a, const DisclosureSpan* b) {
              return std::tie(a->start, a->end, a->category) <
                     std::tie(b->start, b->end, b->category);
            });
  TokenLabels labels(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (const DisclosureSpan* s : sorted) {
      if (s->start >= tokens[i].end) break;
      if (OverlapLen(tokens[i], s->range()) > 0) {
        labels[i] = s->category;
        break;
      }
    }
  }
  return labels;
}

ClassScores TokenPrf(std::span<const TokenizedPair> docs) {
  std::map<Category, Counts> counts;
  for (const TokenizedPair& d : docs) {
    if (d.pred.size() != d.gold.size()) {
      throw InputError("tokenization mismatch for document '" + d.doc_id +
                       "': " + std::to_string(d.pred.size()) + " vs " +
                       std::to_string(d.gold.size()) + " tokens");
    }
    for (std::size_t i = 0; i < d.pred.size(); ++i) {
      if (d.pred[i]) ++counts[*d.pred[i]].pred;
      if (d.gold[i]) ++counts[*d.gold[i]].gold;
      if (d.pred[i] && d.gold[i] && *d.pred[i] == *d.gold[i]) {
        ++counts[*d.pred[i]].tp;
      }
    }
  }
  return Finish(counts);
}

}  // namespace sdtk::eval
