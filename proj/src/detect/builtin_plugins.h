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

#ifndef SDTK_DETECT_BUILTIN_PLUGINS_H_
#define SDTK_DETECT_BUILTIN_PLUGINS_H_

#include <map>
#include <string>
#include <vector>

#include "core/types.h"
#include "detect/plugins.h"
#include "detect/regex_rules.h"

namespace sdtk::detect {

// Emits no spans.
class NullTagger : public Tagger {
 public:
  TaggerOutput Tag(const Chunk& chunk) const override;
  std::string version() const override { return "none"; }
};

// Keyword baseline: regex rules with categories, snapped to word tokens.
// Overlapping matches are resolved longest first.
class RulesTagger : public Tagger {
 public:
  explicit RulesTagger(RegexRuleSet rules) : rules_(std::move(rules)) {}
  TaggerOutput Tag(const Chunk& chunk) const override;
  std::string version() const override { return "rules-" + rules_.version(); }

 private:
  RegexRuleSet rules_;
};

// Replays known spans, keyed by document id. Useful for pipeline tests and
// for measuring everything but the tagger.
class OracleTagger : public Tagger {
 public:
  explicit OracleTagger(std::vector<DisclosureSpan> spans);
  TaggerOutput Tag(const Chunk& chunk) const override;
  std::string version() const override { return "oracle"; }

 private:
  std::map<std::string, std::vector<DisclosureSpan>> by_doc_;
};

class ConstantGate : public SentenceGate {
 public:
  explicit ConstantGate(bool answer) : answer_(answer) {}
  bool ContainsDisclosure(std::string_view) const override { return answer_; }
  std::string version() const override { return answer_ ? "always" : "never"; }

 private:
  bool answer_;
};

// Positive when the sentence has a first-person singular cue word
// (I, I'm, im, my, me, mine, myself, ...).
class KeywordGate : public SentenceGate {
 public:
  bool ContainsDisclosure(std::string_view sentence) const override;
  std::string version() const override { return "keyword-1"; }
};

// Finds self-introductions ("my name is xxx", "call me xxx").
class PatternRecognizer : public PersonRecognizer {
 public:
  explicit PatternRecognizer(RegexRuleSet rules) : rules_(std::move(rules)) {}
  std::vector<SpanRange> FindPersons(std::string_view text) const override;
  std::string version() const override { return "pattern-" + rules_.version(); }

 private:
  RegexRuleSet rules_;
};

// Remote plugins speaking a small JSON protocol at `base_url`:
//   POST /tag     {"text"}     -> {"tokens": [[s, e], ...], "labels": [...]}
//   POST /gate    {"sentence"} -> {"disclosure": bool}
//   POST /persons {"text"}     -> {"spans": [[s, e], ...]}
// Offsets are code points.
std::unique_ptr<Tagger> MakeHttpTagger(const std::string& base_url,
                                       double timeout_s);
std::unique_ptr<SentenceGate> MakeHttpGate(const std::string& base_url,
                                           double timeout_s);
std::unique_ptr<PersonRecognizer> MakeHttpRecognizer(const std::string& base_url,
                                                     double timeout_s);

}  // namespace sdtk::detect

#endif  // SDTK_DETECT_BUILTIN_PLUGINS_H_
