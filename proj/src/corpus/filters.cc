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

#include "corpus/filters.h"

#include <algorithm>
#include <array>
#include <regex>

#include "core/errors.h"
#include "core/tokenize.h"
#include "core/unicode.h"

namespace sdtk::corpus {
namespace {

constexpr std::array<std::string_view, 60> kStopwords = {
    "the",  "a",    "an",    "and",   "or",    "but",  "of",    "to",
    "in",   "on",   "at",    "for",   "with",  "is",   "are",   "was",
    "were", "be",   "been",  "it",    "this",  "that", "i",     "you",
    "he",   "she",  "we",    "they",  "my",    "your", "me",    "not",
    "have", "has",  "had",   "do",    "does",  "did",  "so",    "if",
    "what", "how",  "when",  "just",  "about", "from", "as",    "can",
    "would", "will", "all",  "there", "their", "his",  "her",   "im",
    "don't", "i'm", "it's",  "like"};

bool IsLetterWord(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '\'';
  });
}

std::optional<bool> OptionalFlag(const Json& r, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    auto it = r.find(k);
    if (it == r.end() || it->is_null()) continue;
    if (!it->is_boolean()) return std::nullopt;
    if (it->get<bool>()) return true;
  }
  return false;
}

bool IsStringOrAbsent(const Json& r, const char* key) {
  auto it = r.find(key);
  return it == r.end() || it->is_null() || it->is_string();
}

std::string StringField(const Json& r, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    auto it = r.find(k);
    if (it != r.end() && it->is_string()) return it->get<std::string>();
  }
  return "";
}

}  // namespace

std::optional<double> FieldLanguageIdentifier::EnglishScore(const Json& record) const {
  auto it = record.find(field_);
  if (it == record.end() || !it->is_number()) return std::nullopt;
  const double v = it->get<double>();
  if (v < 0.0 || v > 1.0) return std::nullopt;
  return v;
}

double StopwordLanguageIdentifier::ScoreText(std::string_view text) {
  std::size_t words = 0, hits = 0;
  for (const std::string& raw : SplitWhitespace(unicode::ToLower(text))) {
    std::string w;
    for (char c : raw) {
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '\'') w.push_back(c);
    }
    if (!IsLetterWord(w)) continue;
    ++words;
    if (std::find(kStopwords.begin(), kStopwords.end(), w) != kStopwords.end()) ++hits;
  }
  std::size_t tokens = SplitWhitespace(text).size();
  if (tokens == 0) return 0.0;
  // Function words make up roughly a third of running English text.
  const double coverage = double(words) / double(tokens);
  const double ratio = words == 0 ? 0.0 : double(hits) / double(words);
  return std::min(1.0, ratio / 0.25) * coverage;
}

std::optional<double> StopwordLanguageIdentifier::EnglishScore(const Json& record) const {
  const std::string text = StringField(record, {"title"}) + "\n" +
                           StringField(record, {"body", "selftext", "text"});
  return ScoreText(text);
}

std::optional<double> AutoLanguageIdentifier::EnglishScore(const Json& record) const {
  if (auto v = field_.EnglishScore(record)) return v;
  return stopword_.EnglishScore(record);
}

std::unique_ptr<LanguageIdentifier> MakeLanguageIdentifier(const Config& config) {
  const std::string name = config.GetString("corpus.langid", "auto");
  const std::string field = config.GetString("corpus.langid_field", "lang_en_prob");
  if (name == "auto") return std::make_unique<AutoLanguageIdentifier>(field);
  if (name == "field") return std::make_unique<FieldLanguageIdentifier>(field);
  if (name == "stopword") return std::make_unique<StopwordLanguageIdentifier>();
  throw ConfigError("unknown corpus.langid '" + name + "'");
}

Json FilterReport::ToJson() const {
  Json d = Json::object();
  for (const auto& [rule, n] : dropped) d[rule] = n;
  return {{"input", input}, {"kept", kept}, {"dropped", d}};
}

const char* FirstFailedRule(const Json& record, const LanguageIdentifier& langid,
                            double min_english) {
  if (!record.is_object() || !record.contains("id") ||
      !IsStringOrAbsent(record, "title") || !IsStringOrAbsent(record, "body")) {
    return kRuleMalformed;
  }
  const auto nsfw = OptionalFlag(record, {"over_18", "nsfw"});
  const auto removed = OptionalFlag(record, {"removed", "removed_by_moderator"});
  if (!nsfw || !removed) return kRuleMalformed;
  if (*nsfw) return kRuleNsfw;
  if (*removed) return kRuleRemoved;
  const auto score = langid.EnglishScore(record);
  if (!score) return kRuleMalformed;
  if (!(*score > min_english)) return kRuleNonEnglish;
  return nullptr;
}

std::vector<Json> FilterPosts(const std::vector<Json>& records,
                              const LanguageIdentifier& langid,
                              FilterReport* report, double min_english) {
  FilterReport local;
  FilterReport& r = report ? *report : local;
  r = FilterReport{};
  for (const char* rule : {kRuleMalformed, kRuleNsfw, kRuleRemoved, kRuleNonEnglish}) {
    r.dropped[rule] = 0;
  }
  std::vector<Json> kept;
  for (const Json& record : records) {
    ++r.input;
    if (const char* rule = FirstFailedRule(record, langid, min_english)) {
      ++r.dropped[rule];
    } else {
      kept.push_back(record);
      ++r.kept;
    }
  }
  return kept;
}

bool KeepShareGptTurn(const Json& turn, std::size_t max_tokens) {
  if (!turn.is_object()) return false;
  const std::string role = unicode::ToLower(StringField(turn, {"role", "from"}));
  if (role != "human" && role != "user") return false;
  const std::string text = StringField(turn, {"text", "value"});
  if (SplitWhitespace(text).size() > max_tokens) return false;
  static const std::regex kI("\\bI\\b");
  static const std::regex kMy("\\bmy\\b", std::regex::icase);
  return std::regex_search(text, kI) || std::regex_search(text, kMy);
}

std::vector<Json> FilterShareGpt(const std::vector<Json>& turns,
                                 FilterReport* report, std::size_t max_tokens) {
  FilterReport local;
  FilterReport& r = report ? *report : local;
  r = FilterReport{};
  for (const char* rule : {"not_human", "too_long", "no_first_person"}) r.dropped[rule] = 0;
  std::vector<Json> kept;
  for (const Json& turn : turns) {
    ++r.input;
    if (KeepShareGptTurn(turn, max_tokens)) {
      kept.push_back(turn);
      ++r.kept;
      continue;
    }
    const std::string role =
        turn.is_object() ? unicode::ToLower(StringField(turn, {"role", "from"})) : "";
    if (role != "human" && role != "user") {
      ++r.dropped["not_human"];
    } else if (SplitWhitespace(StringField(turn, {"text", "value"})).size() > max_tokens) {
      ++r.dropped["too_long"];
    } else {
      ++r.dropped["no_first_person"];
    }
  }
  return kept;
}

}  // namespace sdtk::corpus
