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

#include "eval/report.h"

#include <set>

#include "core/errors.h"
#include "core/tokenize.h"
#include "core/unicode.h"
#include "fmt/format.h"

namespace sdtk::eval {
namespace {

std::vector<SpanRange> TokensFromSnapshots(
    const std::string& doc_id, const std::vector<const DisclosureSpan*>& spans) {
  std::map<std::size_t, char32_t> known;
  for (const DisclosureSpan* s : spans) {
    const std::u32string text = unicode::Decode(s->text);
    if (text.size() != s->end - s->start) {
      throw InputError("span [" + std::to_string(s->start) + ", " +
                       std::to_string(s->end) + ") in '" + doc_id +
                       "' has a snapshot of the wrong length");
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
      auto [it, inserted] = known.emplace(s->start + i, text[i]);
      if (!inserted && it->second != text[i]) {
        throw InputError("tokenization mismatch in '" + doc_id +
                         "': span snapshots disagree at offset " +
                         std::to_string(s->start + i));
      }
    }
  }
  std::vector<SpanRange> tokens;
  auto it = known.begin();
  while (it != known.end()) {
    const std::size_t region_start = it->first;
    std::u32string region;
    std::size_t next = region_start;
    while (it != known.end() && it->first == next) {
      region += it->second;
      ++next;
      ++it;
    }
    for (SpanRange t : TokenizeWords(unicode::Encode(region))) {
      tokens.push_back({t.start + region_start, t.end + region_start});
    }
  }
  return tokens;
}

std::string Percent(double v) { return fmt::format("{:.2f}", 100.0 * v); }

}  // namespace

EvalReport Evaluate(std::span<const DisclosureSpan> pred,
                    std::span<const DisclosureSpan> gold,
                    const std::map<std::string, std::string>* doc_texts) {
  EvalReport report;
  report.exact = SpanPrf(pred, gold, MatchMode::kExact);
  report.partial = SpanPrf(pred, gold, MatchMode::kPartial);

  std::map<std::string, std::pair<std::vector<DisclosureSpan>,
                                  std::vector<DisclosureSpan>>> by_doc;
  for (const DisclosureSpan& s : pred) by_doc[s.doc_id].first.push_back(s);
  for (const DisclosureSpan& s : gold) by_doc[s.doc_id].second.push_back(s);

  std::vector<TokenizedPair> pairs;
  for (const auto& [doc_id, sides] : by_doc) {
    std::vector<SpanRange> tokens;
    if (doc_texts) {
      auto it = doc_texts->find(doc_id);
      if (it == doc_texts->end()) {
        throw InputError("no document text for '" + doc_id + "'");
      }
      for (const auto& s : sides.first) CheckSpan(s, it->second);
      for (const auto& s : sides.second) CheckSpan(s, it->second);
      tokens = TokenizeWords(it->second);
    } else {
      std::vector<const DisclosureSpan*> all;
      for (const auto& s : sides.first) all.push_back(&s);
      for (const auto& s : sides.second) all.push_back(&s);
      tokens = TokensFromSnapshots(doc_id, all);
    }
    pairs.push_back({doc_id, LabelTokens(tokens, sides.first),
                     LabelTokens(tokens, sides.second)});
  }
  report.token = TokenPrf(pairs);
  report.num_documents = by_doc.size();
  report.metadata = {
      {"matching", "one-to-one per document and class; greedy by overlap"},
      {"partial_rule", "containment and overlap > 0.5 * longer span"},
      {"average", "unweighted mean over classes with gold spans"},
      {"tokenization", doc_texts ? "documents" : "span snapshots"},
      {"scale", "0-1"},
  };
  return report;
}

Json ToJson(const PRF& prf) {
  return {{"precision", prf.precision},
          {"recall", prf.recall},
          {"f1", prf.f1},
          {"support", prf.support},
          {"true_positives", prf.true_positives},
          {"predicted", prf.predicted}};
}

Json ToJson(const ClassScores& scores) {
  Json per_class = Json::object();
  for (const auto& [category, prf] : scores.per_class) {
    per_class[std::string(CategoryName(category))] = ToJson(prf);
  }
  return {{"per_class", per_class},
          {"average_f1", scores.average_f1 ? Json(*scores.average_f1) : Json()}};
}

Json ToJson(const EvalReport& report) {
  return {{"exact", ToJson(report.exact)},
          {"partial", ToJson(report.partial)},
          {"token", ToJson(report.token)},
          {"num_documents", report.num_documents},
          {"metadata", report.metadata}};
}

std::string FormatTable(const EvalReport& report) {
  auto cell = [](const ClassScores& s, Category c) {
    auto it = s.per_class.find(c);
    return it == s.per_class.end() ? Percent(0.0) : Percent(it->second.f1);
  };
  auto avg = [](const ClassScores& s) {
    return s.average_f1 ? Percent(*s.average_f1) : std::string("-");
  };
  std::string out = fmt::format("{:<28} {:>8} {:>11} {:>9}\n", "Class (#spans)",
                                "Span F1", "Partial F1", "Token F1");
  for (Category c : kAllCategories) {
    auto it = report.partial.per_class.find(c);
    if (it == report.partial.per_class.end() || it->second.support == 0) continue;
    const std::string label =
        fmt::format("{} ({})", CategoryName(c), it->second.support);
    out += fmt::format("{:<28} {:>8} {:>11} {:>9}\n", label,
                       cell(report.exact, c), cell(report.partial, c),
                       cell(report.token, c));
  }
  out += fmt::format("{:<28} {:>8} {:>11} {:>9}\n", "Average", avg(report.exact),
                     avg(report.partial), avg(report.token));
  return out;
}

}  // namespace sdtk::eval
