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

#ifndef SDTK_CORPUS_FILTERS_H_
#define SDTK_CORPUS_FILTERS_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/config.h"
#include "core/records.h"

namespace sdtk::corpus {

// Probability-like score in [0, 1] that a post is English.
class LanguageIdentifier {
 public:
  virtual ~LanguageIdentifier() = default;
  // nullopt when the record cannot be scored (counted as malformed).
  virtual std::optional<double> EnglishScore(const Json& record) const = 0;
  virtual std::string name() const = 0;
};

// Reads a precomputed score from a numeric record field, as produced by an
// external identifier run over the dump.
class FieldLanguageIdentifier : public LanguageIdentifier {
 public:
  explicit FieldLanguageIdentifier(std::string field) : field_(std::move(field)) {}
  std::optional<double> EnglishScore(const Json& record) const override;
  std::string name() const override { return "field:" + field_; }

 private:
  std::string field_;
};

// Share of alphabetic words that are common English function words, scaled
// so that ordinary English prose scores near 1. Title and body are scored
// together.
class StopwordLanguageIdentifier : public LanguageIdentifier {
 public:
  std::optional<double> EnglishScore(const Json& record) const override;
  std::string name() const override { return "stopword"; }
  static double ScoreText(std::string_view text);
};

// The field identifier when the record has the field, else the stopword one.
class AutoLanguageIdentifier : public LanguageIdentifier {
 public:
  explicit AutoLanguageIdentifier(std::string field) : field_(std::move(field)) {}
  std::optional<double> EnglishScore(const Json& record) const override;
  std::string name() const override { return "auto"; }

 private:
  FieldLanguageIdentifier field_;
  StopwordLanguageIdentifier stopword_;
};

// corpus.langid: "auto" (default), "field" or "stopword"; corpus.langid_field
// names the score field (default "lang_en_prob").
std::unique_ptr<LanguageIdentifier> MakeLanguageIdentifier(const Config& config);

// Drop rules, checked in this order; a dropped record is counted under the
// first rule it fails.
inline constexpr const char* kRuleMalformed = "malformed";
inline constexpr const char* kRuleNsfw = "nsfw";
inline constexpr const char* kRuleRemoved = "removed";
inline constexpr const char* kRuleNonEnglish = "non_english";

struct FilterReport {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::map<std::string, std::size_t> dropped;  // rule id -> count
  Json ToJson() const;
};

// The rule a raw post fails, or nullptr when it is kept. English must score
// strictly above `min_english` (0.7).
const char* FirstFailedRule(const Json& record, const LanguageIdentifier& langid,
                            double min_english = 0.7);

// Raw post JSONL records {"id", "title", "body", "over_18", "removed", ...}.
// Kept records are returned unmodified.
std::vector<Json> FilterPosts(const std::vector<Json>& records,
                              const LanguageIdentifier& langid,
                              FilterReport* report, double min_english = 0.7);

// Human-authored turns of at most `max_tokens` whitespace tokens that
// contain the word "I" (case-sensitive) or "my" (any case). Roles "human"
// and "user" count as human. Records are {"conversation_id", "role", "text"};
// the ShareGPT export names "from" and "value" are accepted too.
bool KeepShareGptTurn(const Json& turn, std::size_t max_tokens = 500);
std::vector<Json> FilterShareGpt(const std::vector<Json>& turns,
                                 FilterReport* report = nullptr,
                                 std::size_t max_tokens = 500);

}  // namespace sdtk::corpus

#endif  // SDTK_CORPUS_FILTERS_H_
