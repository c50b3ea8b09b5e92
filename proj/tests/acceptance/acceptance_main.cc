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

// Acceptance checks. Prints one PASS, FAIL or SKIP line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "abstract/parse.h"
#include "abstract/prompt.h"
#include "abstract/validate.h"
#include "core/errors.h"
#include "core/jsonl.h"
#include "core/span.h"
#include "core/tokenize.h"
#include "core/unicode.h"
#include "corpus/filters.h"
#include "detect/bio.h"
#include "detect/builtin_plugins.h"
#include "detect/pipeline.h"
#include "detect/regex_rules.h"
#include "eval/agreement.h"
#include "eval/classification.h"
#include "eval/generation.h"
#include "eval/report.h"
#include "eval/span_metrics.h"
#include "fmt/format.h"
#include "importance/importance.h"
#include "llm/client.h"
#include "llm/provider.h"
#include "spdlog/spdlog.h"
#include "synthetic.h"

namespace sdtk::acceptance {
namespace {

// Tolerances and sizes.
constexpr int kOracleDocs = 1000;
constexpr int kMaxSpansPerSide = 6;
constexpr int kMaxTokens = 50;
constexpr double kOracleSeconds = 10.0;
constexpr int kOrderingTrials = 1000;
constexpr int kBioCases = 500;
constexpr int kHungarianSets = 200;
constexpr double kHungarianTol = 1e-9;
constexpr double kAlphaTol = 1e-6;
constexpr int kPipelineDocs = 120;
constexpr int kJitterTokens = 2;
constexpr int kValidatorCandidates = 500;
constexpr double kReferenceTol = 0.5;

enum class Outcome { kPass, kFail, kSkip };

struct Result {
  Outcome outcome;
  std::string detail;
};

Result Pass(std::string d) { return {Outcome::kPass, std::move(d)}; }
Result Fail(std::string d) { return {Outcome::kFail, std::move(d)}; }
Result Check(bool ok, std::string d) { return {ok ? Outcome::kPass : Outcome::kFail, std::move(d)}; }

std::string FixturePath(const std::string& rel) {
  return std::string(SDTK_FIXTURE_DIR) + "/" + rel;
}

// Independent restatement of the partial-match rule: one span contains the
// other and the shorter covers more than half of the longer.
bool OraclePartial(SpanRange a, SpanRange b) {
  const bool a_in_b = b.start <= a.start && a.end <= b.end;
  const bool b_in_a = a.start <= b.start && b.end <= a.end;
  if (!a_in_b && !b_in_a) return false;
  const std::size_t la = a.end - a.start, lb = b.end - b.start;
  return 2 * std::min(la, lb) > std::max(la, lb);
}

bool OracleOverlap(SpanRange a, SpanRange b) {
  return std::max(a.start, b.start) < std::min(a.end, b.end);
}

// Exhaustive maximum one-to-one matching by recursion over predictions.
std::size_t BruteMatching(const std::vector<SpanRange>& pred, const std::vector<SpanRange>& gold,
                          const std::function<bool(SpanRange, SpanRange)>& match) {
  std::function<std::size_t(std::size_t, unsigned)> best = [&](std::size_t i, unsigned used) {
    if (i == pred.size()) return std::size_t{0};
    std::size_t out = best(i + 1, used);
    for (std::size_t j = 0; j < gold.size(); ++j) {
      if (!(used & (1u << j)) && match(pred[i], gold[j])) {
        out = std::max(out, 1 + best(i + 1, used | (1u << j)));
      }
    }
    return out;
  };
  return best(0, 0);
}

struct RandomDoc {
  std::string text;
  std::vector<DisclosureSpan> pred;
  std::vector<DisclosureSpan> gold;
};

constexpr std::array<Category, 3> kTrialCategories = {Category::kAge, Category::kHealth,
                                                      Category::kPet};

RandomDoc MakeRandomDoc(const std::string& id, std::mt19937& rng) {
  RandomDoc d;
  const int n_tokens = 1 + static_cast<int>(rng() % kMaxTokens);
  for (int i = 0; i < n_tokens; ++i) {
    if (i) d.text += ' ';
    d.text += "w" + std::to_string(rng() % 100);
  }
  const std::vector<SpanRange> tokens = TokenizeWords(d.text);
  auto random_spans = [&](std::vector<DisclosureSpan>* out) {
    const int k = static_cast<int>(rng() % (kMaxSpansPerSide + 1));
    for (int i = 0; i < k; ++i) {
      std::size_t a = rng() % tokens.size();
      std::size_t b = rng() % tokens.size();
      if (a > b) std::swap(a, b);
      const Category c = kTrialCategories[rng() % kTrialCategories.size()];
      out->push_back(MakeSpan(id, d.text, tokens[a].start, tokens[b].end, c));
    }
  };
  random_spans(&d.gold);
  random_spans(&d.pred);
  // Predictions near gold spans make partial matches common.
  for (const DisclosureSpan& g : d.gold) {
    if (d.pred.size() >= kMaxSpansPerSide || rng() % 2) continue;
    std::size_t start = g.start, end = g.end;
    if (rng() % 2 && end - start > 2) ++start;
    d.pred.push_back(MakeSpan(id, d.text, start, end, g.category));
  }
  return d;
}

struct Tally {
  std::size_t tp = 0, pred = 0, gold = 0;
};

double F1(const Tally& t) {
  if (t.pred == 0 || t.gold == 0 || t.tp == 0) return 0.0;
  const double p = static_cast<double>(t.tp) / t.pred;
  const double r = static_cast<double>(t.tp) / t.gold;
  return 2 * p * r / (p + r);
}

// Per-class tallies pooled over documents, matching within each document.
std::map<Category, Tally> OracleTallies(const std::vector<RandomDoc>& docs,
                                        const std::function<bool(SpanRange, SpanRange)>& match) {
  std::map<Category, Tally> out;
  for (const RandomDoc& d : docs) {
    for (Category c : kTrialCategories) {
      std::vector<SpanRange> p, g;
      for (const auto& s : d.pred) if (s.category == c) p.push_back(s.range());
      for (const auto& s : d.gold) if (s.category == c) g.push_back(s.range());
      if (p.empty() && g.empty()) continue;
      Tally& t = out[c];
      t.pred += p.size();
      t.gold += g.size();
      t.tp += BruteMatching(p, g, match);
    }
  }
  return out;
}

std::vector<DisclosureSpan> Flatten(const std::vector<RandomDoc>& docs, bool pred) {
  std::vector<DisclosureSpan> out;
  for (const RandomDoc& d : docs) {
    const auto& src = pred ? d.pred : d.gold;
    out.insert(out.end(), src.begin(), src.end());
  }
  return out;
}

std::vector<RandomDoc> RandomDocs(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<RandomDoc> docs;
  for (int i = 0; i < n; ++i) docs.push_back(MakeRandomDoc("r" + std::to_string(i), rng));
  return docs;
}

Result PartialOracleEquivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<RandomDoc> docs = RandomDocs(kOracleDocs, 20240901);
  std::size_t mismatches = 0;
  for (const RandomDoc& d : docs) {
    const std::vector<RandomDoc> one = {d};
    const auto oracle = OracleTallies(one, OraclePartial);
    const auto scores = eval::SpanPrf(d.pred, d.gold, eval::MatchMode::kPartial);
    for (const auto& [c, t] : oracle) {
      auto it = scores.per_class.find(c);
      if (it == scores.per_class.end() || it->second.true_positives != t.tp ||
          it->second.predicted != t.pred || it->second.support != t.gold ||
          it->second.f1 != F1(t)) {
        ++mismatches;
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return Check(mismatches == 0 && secs < kOracleSeconds,
               fmt::format("{} docs, {} class mismatches, {:.2f} s (limit {} s)", kOracleDocs,
                           mismatches, secs, kOracleSeconds));
}

Result MetricOrdering() {
  std::size_t violations = 0;
  std::mt19937 rng(77);
  for (int trial = 0; trial < kOrderingTrials; ++trial) {
    std::vector<RandomDoc> docs;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) docs.push_back(MakeRandomDoc("o" + std::to_string(i), rng));
    const auto pred = Flatten(docs, true);
    const auto gold = Flatten(docs, false);
    const auto exact = eval::SpanPrf(pred, gold, eval::MatchMode::kExact);
    const auto partial = eval::SpanPrf(pred, gold, eval::MatchMode::kPartial);
    const auto bound = OracleTallies(docs, OracleOverlap);
    for (const auto& [c, t] : bound) {
      const double e = exact.per_class.count(c) ? exact.per_class.at(c).f1 : 0.0;
      const double p = partial.per_class.count(c) ? partial.per_class.at(c).f1 : 0.0;
      if (!(e <= p && p <= F1(t))) ++violations;
    }
  }
  return Check(violations == 0,
               fmt::format("{} trials, {} violations of exact <= partial <= overlap bound",
                           kOrderingTrials, violations));
}

Result BoundaryTable() {
  struct Case {
    SpanRange pred, gold;
    bool expected;
  };
  const std::vector<Case> cases = {
      {{2, 5}, {0, 10}, false},
      {{0, 6}, {0, 10}, true},
      {{3, 8}, {3, 8}, true},
      {{0, 6}, {4, 10}, false},
  };
  int ok = 0;
  for (const Case& c : cases) {
    ok += eval::PartialMatch(c.pred, c.gold) == c.expected &&
          eval::PartialMatch(c.gold, c.pred) == c.expected;
  }
  return Check(ok == static_cast<int>(cases.size()),
               fmt::format("{}/{} boundary cases", ok, cases.size()));
}

Result BioRoundTrip() {
  std::mt19937 rng(5);
  int mismatches = 0;
  for (int trial = 0; trial < kBioCases; ++trial) {
    std::string text;
    const int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      if (i) text += rng() % 5 ? " " : "  ";
      text += rng() % 7 ? "tok" + std::to_string(rng() % 50) : std::string(",");
    }
    const std::vector<SpanRange> tokens = TokenizeWords(text);
    std::vector<detect::LabeledRange> spans;
    std::size_t i = 0;
    while (i < tokens.size()) {
      if (rng() % 3 == 0) {
        const std::size_t len = 1 + rng() % 4;
        const std::size_t last = std::min(tokens.size() - 1, i + len - 1);
        spans.push_back({{tokens[i].start, tokens[last].end},
                         kAllCategories[rng() % kAllCategories.size()]});
        i = last + 1;
      } else {
        ++i;
      }
    }
    const auto labels = detect::EncodeBio(tokens, spans);
    if (detect::DecodeBioRanges(labels, tokens) != spans) ++mismatches;
  }
  return Check(mismatches == 0, fmt::format("{} cases, {} mismatches", kBioCases, mismatches));
}

double BruteMatchingScore(const std::vector<std::string>& g, const std::vector<std::string>& r,
                          eval::GenMetric metric) {
  const bool rows_are_g = g.size() <= r.size();
  const auto& small = rows_are_g ? g : r;
  const auto& large = rows_are_g ? r : g;
  std::vector<std::size_t> perm(large.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = -1.0;
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < small.size(); ++i) {
      total += rows_are_g ? eval::Score(metric, small[i], large[perm[i]])
                          : eval::Score(metric, large[perm[i]], small[i]);
    }
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best / small.size();
}

Result Hungarian() {
  static const std::vector<std::string> kWords = {"a", "big", "city", "in", "the", "state",
                                                  "my", "job", "near", "coast", "old", "pet"};
  std::mt19937 rng(99);
  auto phrase = [&] {
    std::string s;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) s += (i ? " " : "") + kWords[rng() % kWords.size()];
    return s;
  };
  double worst = 0.0;
  int not_invariant = 0;
  for (int set = 0; set < kHungarianSets; ++set) {
    std::vector<std::string> g(1 + rng() % 4), r(1 + rng() % 4);
    for (auto& s : g) s = phrase();
    for (auto& s : r) s = phrase();
    for (auto metric : {eval::GenMetric::kBleu, eval::GenMetric::kRouge2,
                        eval::GenMetric::kRougeL}) {
      const double fast = eval::MatchingScore(g, r, metric);
      worst = std::max(worst, std::abs(fast - BruteMatchingScore(g, r, metric)));
      auto g2 = g, r2 = r;
      std::shuffle(g2.begin(), g2.end(), rng);
      std::shuffle(r2.begin(), r2.end(), rng);
      if (eval::MatchingScore(g2, r2, metric) != fast) ++not_invariant;
    }
  }
  return Check(worst <= kHungarianTol && not_invariant == 0,
               fmt::format("{} sets x 3 metrics, max |diff| {:.3g} (tol {}), {} permutation "
                           "changes",
                           kHungarianSets, worst, kHungarianTol, not_invariant));
}

Result Agreement() {
  const eval::RatingMatrix perfect = {{0, 1, 1, 0, 2}, {0, 1, 1, 0, 2}};
  const auto alpha_perfect = eval::KrippendorffAlphaNominal(perfect);
  const double two = eval::TwoAgree({1, 4, 5}, {1, 4, 5});
  // Two annotators over four units: X X Y Y and X X Y X. Hand-computed from
  // the coincidence matrix as 8/15.
  const eval::RatingMatrix fixture = {{0, 0, 1, 1}, {0, 0, 1, 0}};
  const auto alpha = eval::KrippendorffAlphaNominal(fixture);
  const bool ok = alpha_perfect && *alpha_perfect == 1.0 && two == 1.0 && alpha &&
                  std::abs(*alpha - 8.0 / 15.0) <= kAlphaTol;
  return Check(ok, fmt::format("perfect alpha {}, two_agree {}, fixture alpha {:.6f} vs {:.6f}",
                               alpha_perfect ? fmt::format("{}", *alpha_perfect) : "undefined",
                               two, alpha.value_or(-1.0), 8.0 / 15.0));
}

Result PipelineOracle() {
  std::mt19937 rng(2024);
  std::vector<synthetic::Sample> corpus;
  std::vector<DisclosureSpan> gold;
  for (int i = 0; i < kPipelineDocs; ++i) {
    corpus.push_back(synthetic::MakeDocument("s" + std::to_string(i), rng));
    gold.insert(gold.end(), corpus.back().gold.begin(), corpus.back().gold.end());
  }
  detect::DetectionPipeline::Parts parts;
  parts.tagger = std::make_unique<detect::OracleTagger>(gold);
  parts.gate = std::make_unique<detect::KeywordGate>();
  parts.contact_rules = detect::RegexRuleSet::Load("", "rules/contact_rules.json");
  detect::DetectionPipeline pipeline(std::move(parts));

  std::vector<DisclosureSpan> pred;
  std::vector<DisclosureSpan> jittered;
  for (const synthetic::Sample& s : corpus) {
    const auto spans = pipeline.Detect(s.doc).spans;
    pred.insert(pred.end(), spans.begin(), spans.end());
    const std::vector<SpanRange> tokens = TokenizeWords(s.doc.text);
    auto token_at = [&](std::size_t offset, bool is_end) {
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (is_end ? tokens[i].end == offset : tokens[i].start == offset) return i;
      }
      return std::size_t{0};
    };
    for (const DisclosureSpan& p : spans) {
      const long n = static_cast<long>(tokens.size());
      auto shift = [&] { return static_cast<long>(rng() % (2 * kJitterTokens + 1)) - kJitterTokens; };
      long a = std::clamp<long>(static_cast<long>(token_at(p.start, false)) + shift(), 0, n - 1);
      long b = std::clamp<long>(static_cast<long>(token_at(p.end, true)) + shift(), 0, n - 1);
      if (a > b) std::swap(a, b);
      jittered.push_back(MakeSpan(p.doc_id, s.doc.text, tokens[a].start, tokens[b].end,
                                  p.category));
    }
  }
  const auto clean = eval::SpanPrf(pred, gold, eval::MatchMode::kPartial);
  const double clean_f1 = clean.average_f1.value_or(0.0) * 100.0;
  const auto exact = eval::SpanPrf(jittered, gold, eval::MatchMode::kExact);
  const auto partial = eval::SpanPrf(jittered, gold, eval::MatchMode::kPartial);
  int bad_classes = 0;
  for (const auto& [c, prf] : exact.per_class) {
    if (partial.per_class.at(c).f1 < prf.f1) ++bad_classes;
  }
  return Check(clean_f1 == 100.0 && bad_classes == 0,
               fmt::format("{} docs, {} gold spans, oracle partial F1 {:.2f}; jittered "
                           "exact {:.2f} / partial {:.2f}, {} classes with partial < exact",
                           kPipelineDocs, gold.size(), clean_f1,
                           exact.average_f1.value_or(0) * 100,
                           partial.average_f1.value_or(0) * 100, bad_classes));
}

std::string Squash(std::string_view s) {
  std::string out;
  for (char c : unicode::ToLower(s)) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

Result AbstractionValidator() {
  std::mt19937 rng(31);
  std::vector<synthetic::Sample> samples;
  for (int i = 0; i < 60; ++i) samples.push_back(synthetic::MakeDocument("v" + std::to_string(i), rng));
  std::vector<std::pair<std::string, DisclosureSpan>> targets;
  for (const auto& s : samples) {
    for (const auto& g : s.gold) targets.emplace_back(s.doc.text, g);
  }

  static const std::vector<std::string> kReplacements = {
      "a place", "someone", "a family member", "a health issue", "an age", "a job",
      "some money", "a pet", "a school"};
  std::size_t current = 0;
  auto stub = std::make_shared<llm::StubProvider>(
      [&](const llm::CompletionRequest&, int) -> llm::CompletionResponse {
        const std::string span = targets[current].second.text;
        switch (rng() % 6) {
          case 0: return {span};
          case 1: return {"{\"span\": \"  " + unicode::ToLower(span) + " \"}"};
          case 2: return {"Generalized Span: \"\""};
          case 3: return {"{\"span\": \"line one\\nline two\"}"};
          case 4: return {"Rationale first.\nGeneralized Span: " +
                          kReplacements[rng() % kReplacements.size()]};
          default: return {"{\"span\": \"" + kReplacements[rng() % kReplacements.size()] + "\"}"};
        }
      });
  llm::ClientOptions options;
  options.sleep = [](std::chrono::milliseconds) {};
  llm::LlmClient client(stub, options);

  int accepted = 0, noop = 0, violations = 0;
  for (int i = 0; i < kValidatorCandidates; ++i) {
    current = static_cast<std::size_t>(i) % targets.size();
    const auto& [text, span] = targets[current];
    const std::string raw = client.Complete(
        client.MakeRequest("one_span", "candidate " + std::to_string(i), 0.7, i),
        llm::CachePolicy::kBypass);
    std::string candidate;
    bool parsed = true;
    try {
      candidate = abstract::ParseSingleCandidate(raw).candidate;
    } catch (const ParseError&) {
      parsed = false;
    }
    const bool is_noop = parsed && Squash(candidate) == Squash(span.text);
    noop += is_noop;
    if (!parsed) continue;
    const ValidationReport report = abstract::ValidateAbstraction(text, span.range(), candidate);
    if (is_noop && report.accepted()) ++violations;
    if (!report.accepted()) continue;
    ++accepted;
    const EditResult edit = ApplyEdit(text, span.start, span.end, candidate);
    const std::size_t n_old = unicode::CodepointCount(text);
    const std::size_t n_new = unicode::CodepointCount(edit.new_text);
    const bool prefix_ok = unicode::Substr(edit.new_text, 0, span.start) ==
                           unicode::Substr(text, 0, span.start);
    const bool suffix_ok = unicode::Substr(edit.new_text, edit.new_end, n_new) ==
                           unicode::Substr(text, span.end, n_old);
    const bool middle_ok =
        unicode::Substr(edit.new_text, span.start, edit.new_end) == candidate;
    if (!prefix_ok || !suffix_ok || !middle_ok) ++violations;
  }
  return Check(violations == 0 && noop > 0 && accepted > 0,
               fmt::format("{} candidates, {} accepted, {} no-ops, {} violations",
                           kValidatorCandidates, accepted, noop, violations));
}

Result ImportanceRules() {
  using L = ImportanceLevel;
  int ok = 0;
  const std::array<L, 3> llh{L::kLow, L::kLow, L::kHigh};
  const std::array<L, 3> lmh{L::kLow, L::kModerate, L::kHigh};
  ok += importance::AggregateGold(llh) == L::kLow;
  ok += importance::AggregateGold(lmh) == L::kModerate;
  for (L l : {L::kLow, L::kModerate, L::kHigh}) {
    const std::array<L, 3> same{l, l, l};
    ok += importance::AggregateGold(same) == l;
  }
  const Json doc = Json::parse(ReadFile(FixturePath("importance_accuracy.json")));
  std::vector<L> preds;
  std::vector<std::array<L, 3>> gold;
  for (const Json& inst : doc.at("instances")) {
    preds.push_back(*ParseImportanceLevel(inst.at("pred").get<std::string>()));
    std::array<L, 3> g{};
    for (int i = 0; i < 3; ++i) g[i] = *ParseImportanceLevel(inst.at("gold")[i].get<std::string>());
    gold.push_back(g);
  }
  const double tally = doc["hand_tally"]["matches"].get<double>() /
                       doc["hand_tally"]["total"].get<double>();
  const double acc = eval::ImportanceAccuracy(preds, gold);
  return Check(ok == 5 && preds.size() == 20 && acc == tally,
               fmt::format("{}/5 aggregation fixtures, accuracy {} vs hand tally {} on {} "
                           "instances",
                           ok, acc, tally, preds.size()));
}

Result Filters() {
  corpus::FieldLanguageIdentifier langid("lang_en_prob");
  corpus::FilterReport reddit;
  const auto kept =
      corpus::FilterPosts(ReadJsonl(FixturePath("reddit_posts.jsonl")), langid, &reddit);
  const std::map<std::string, std::size_t> expected = {
      {corpus::kRuleNsfw, 1}, {corpus::kRuleRemoved, 1}, {corpus::kRuleNonEnglish, 1}};
  corpus::FilterReport share;
  const auto turns =
      corpus::FilterShareGpt(ReadJsonl(FixturePath("sharegpt_turns.jsonl")), &share);
  std::map<std::string, std::size_t> nonzero;
  for (const auto& [rule, n] : reddit.dropped) {
    if (n) nonzero[rule] = n;
  }
  const bool ok = reddit.input == 10 && kept.size() == 7 && nonzero == expected &&
                  share.input == 3 && turns.size() == 1;
  return Check(ok, fmt::format("reddit {}/{} kept, drops {}; sharegpt {}/{} kept", kept.size(),
                               reddit.input, reddit.ToJson()["dropped"].dump(), turns.size(),
                               share.input));
}

Result PromptGoldens() {
  const std::string dir = SDTK_GOLDEN_DIR;
  const Json bindings = Json::parse(ReadFile(dir + "/prompt_bindings.json"));
  abstract::Bindings b;
  for (auto it = bindings.begin(); it != bindings.end(); ++it) b[it.key()] = it.value();
  int matched = 0, total = 0;
  for (const std::string& id : abstract::TemplateIds()) {
    ++total;
    const std::string path = dir + "/prompts/" + id + ".txt";
    if (std::filesystem::exists(path) && abstract::BuildPrompt(id, b) == ReadFile(path)) ++matched;
  }
  const bool format_line =
      abstract::BuildPrompt("three_span_e2e", b).find(R"({"span 1": "xxx")") != std::string::npos;
  return Check(matched == total && total > 0 && format_line,
               fmt::format("{}/{} templates byte-exact, span format line {}", matched, total,
                           format_line ? "present" : "missing"));
}

Result ReferenceTargets() {
  const char* dir = std::getenv("SDTK_REFERENCE_DIR");
  if (!dir) {
    return {Outcome::kSkip,
            "set SDTK_REFERENCE_DIR to a directory with the released predictions.jsonl and "
            "gold.jsonl to compare against the reference per-class partial F1"};
  }
  const std::string pred_path = std::string(dir) + "/predictions.jsonl";
  const std::string gold_path = std::string(dir) + "/gold.jsonl";
  if (!std::filesystem::exists(pred_path) || !std::filesystem::exists(gold_path)) {
    return {Outcome::kSkip, fmt::format("{} lacks predictions.jsonl or gold.jsonl", dir)};
  }
  const std::vector<std::pair<Category, double>> targets = {
      {Category::kAge, 70.77},           {Category::kAgeGender, 70.27},
      {Category::kRaceNationality, 82.35}, {Category::kGender, 72.73},
      {Category::kLocation, 73.33},      {Category::kAppearance, 67.74},
      {Category::kWifeGF, 75.86},        {Category::kFinance, 71.43},
      {Category::kOccupation, 65.22},    {Category::kFamily, 49.02},
      {Category::kHealth, 58.82},        {Category::kMentalHealth, 63.16},
      {Category::kHusbandBF, 70.59},     {Category::kEducation, 69.23},
      {Category::kPet, 55.17},           {Category::kRelationshipStatus, 43.08},
      {Category::kSexualOrientation, 58.33},
  };
  constexpr double kAverage = 65.71;
  const auto scores =
      eval::SpanPrf(ReadSpans(pred_path), ReadSpans(gold_path), eval::MatchMode::kPartial);
  int off = 0;
  std::string worst;
  double worst_diff = 0.0;
  for (const auto& [c, target] : targets) {
    auto it = scores.per_class.find(c);
    const double got = it == scores.per_class.end() ? 0.0 : it->second.f1 * 100;
    const double diff = std::abs(got - target);
    if (diff > kReferenceTol) ++off;
    if (diff >= worst_diff) {
      worst_diff = diff;
      worst = fmt::format("{} {:.2f} vs {:.2f}", CategoryName(c), got, target);
    }
  }
  double mean = 0.0;
  for (const auto& [c, target] : targets) {
    auto it = scores.per_class.find(c);
    mean += it == scores.per_class.end() ? 0.0 : it->second.f1 * 100;
  }
  mean /= targets.size();
  const bool avg_ok = std::abs(mean - kAverage) <= kReferenceTol;
  return Check(off == 0 && avg_ok,
               fmt::format("{} classes outside +/-{}; worst {}; average {:.2f} vs {:.2f}", off,
                           kReferenceTol, worst, mean, kAverage));
}

}  // namespace
}  // namespace sdtk::acceptance

int main() {
  using namespace sdtk::acceptance;
  spdlog::set_level(spdlog::level::warn);
  struct Criterion {
    const char* name;
    Result (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"partial-span metric equals exhaustive matching oracle", PartialOracleEquivalence},
      {"exact <= partial <= token-overlap bound", MetricOrdering},
      {"partial_match boundary table", BoundaryTable},
      {"BIO encode/decode round trip", BioRoundTrip},
      {"Hungarian matching equals permutation search", Hungarian},
      {"agreement statistics fixtures", Agreement},
      {"pipeline oracle loop and boundary jitter", PipelineOracle},
      {"abstraction validator over stub candidates", AbstractionValidator},
      {"importance aggregation and accuracy fixture", ImportanceRules},
      {"Reddit and ShareGPT filter fixtures", Filters},
      {"prompt golden files", PromptGoldens},
      {"reference per-class partial F1 targets", ReferenceTargets},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r = Fail(std::string("exception: ") + e.what());
    }
    const char* tag = r.outcome == Outcome::kPass ? "PASS" : r.outcome == Outcome::kFail ? "FAIL" : "SKIP";
    failed += r.outcome == Outcome::kFail;
    std::cout << fmt::format("{} [{:2}] {}: {}\n", tag, i + 1, criteria[i].name, r.detail);
  }
  return failed == 0 ? 0 : 1;
}
