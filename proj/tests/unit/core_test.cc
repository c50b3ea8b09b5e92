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

#include <gtest/gtest.h>

#include <random>

#include "core/assets.h"
#include "core/category.h"
#include "core/config.h"
#include "core/errors.h"
#include "core/jsonl.h"
#include "core/records.h"
#include "core/span.h"
#include "core/tokenize.h"
#include "core/types.h"
#include "core/unicode.h"
#include "test_util.h"

namespace sdtk {
namespace {

TEST(UnicodeTest, CodepointOffsets) {
  const std::string text = "caf\xC3\xA9 \xF0\x9F\x98\x80 ok";  // café 😀 ok
  EXPECT_EQ(unicode::CodepointCount(text), 9u);
  EXPECT_EQ(unicode::Substr(text, 3, 4), "\xC3\xA9");
  EXPECT_EQ(unicode::Substr(text, 5, 6), "\xF0\x9F\x98\x80");
  unicode::OffsetMap map(text);
  EXPECT_EQ(map.size(), 9u);
  EXPECT_EQ(map.ToByte(5), 6u);
  EXPECT_EQ(map.ToCodepoint(10), 6u);
  EXPECT_THROW(unicode::Substr(text, 8, 10), RangeError);
  EXPECT_THROW(unicode::Decode("\xC3"), ParseError);
}

TEST(CategoryTest, NineteenCategoriesInTwoGroups) {
  int attributes = 0, experiences = 0;
  for (Category c : kAllCategories) {
    (GroupOf(c) == CategoryGroup::kAttribute ? attributes : experiences)++;
    EXPECT_EQ(ParseCategory(CategoryName(c)), c);
    EXPECT_FALSE(CategoryDescription(c).empty());
  }
  EXPECT_EQ(attributes, 13);
  EXPECT_EQ(experiences, 6);
}

TEST(CategoryTest, LenientParsing) {
  EXPECT_EQ(ParseCategory("age_gender"), Category::kAgeGender);
  EXPECT_EQ(ParseCategory("Age/Gender"), Category::kAgeGender);
  EXPECT_EQ(ParseCategory("Husband/BF"), Category::kHusbandBF);
  EXPECT_EQ(ParseCategory("mental health"), Category::kMentalHealth);
  EXPECT_FALSE(ParseCategory("Hobby").has_value());
  EXPECT_THROW(ParseCategoryOrThrow("Hobby"), Error);
}

TEST(SpanTest, MakeSpanSnapshotsText) {
  const DisclosureSpan s = MakeSpan("d", "I am a 23-year-old", 0, 14, Category::kAge);
  EXPECT_EQ(s.text, "I am a 23-year");
  EXPECT_NO_THROW(CheckSpan(s, "I am a 23-year-old"));
  EXPECT_THROW(CheckSpan(s, "You are a 23-year-old"), RangeError);
  EXPECT_THROW(MakeSpan("d", "abc", 2, 2, Category::kAge), RangeError);
  EXPECT_THROW(MakeSpan("d", "abc", 1, 4, Category::kAge), RangeError);
}

TEST(ApplyEditTest, IdentityReplacement) {
  const EditResult r = ApplyEdit("I am 16F today", 5, 8, "16F");
  EXPECT_EQ(r.new_text, "I am 16F today");
  EXPECT_EQ(r.new_end, 8u);
}

TEST(ApplyEditTest, CodepointAware) {
  const EditResult r = ApplyEdit("na\xC3\xAFve caf\xC3\xA9", 6, 10, "bistro");
  EXPECT_EQ(r.new_text, "na\xC3\xAFve bistro");
  EXPECT_EQ(r.new_end, 12u);
  EXPECT_THROW(ApplyEdit("abc", 1, 1, "x"), RangeError);
  EXPECT_THROW(ApplyEdit("abc", 0, 4, "x"), RangeError);
}

TEST(ApplyEditTest, PreservesOutsideCharactersProperty) {
  std::mt19937 rng(7);
  const std::u32string alphabet = U"ab é\U0001F600.";
  for (int trial = 0; trial < 500; ++trial) {
    std::u32string text, repl;
    const int n = 1 + static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) text += alphabet[rng() % alphabet.size()];
    for (int i = 0, m = static_cast<int>(rng() % 8); i < m; ++i) {
      repl += alphabet[rng() % alphabet.size()];
    }
    const std::size_t start = rng() % n;
    const std::size_t end = start + 1 + rng() % (n - start);
    const EditResult r =
        ApplyEdit(unicode::Encode(text), start, end, unicode::Encode(repl));
    const std::u32string out = unicode::Decode(r.new_text);
    ASSERT_EQ(out.substr(0, start), text.substr(0, start));
    ASSERT_EQ(out.substr(r.new_end), text.substr(end));
    ASSERT_EQ(out.substr(start, r.new_end - start), repl);
  }
}

TEST(TokenizeTest, WordsKeepInternalPunctuation) {
  const std::string text = "I'm a 23-year-old, from N.Y.!";
  std::vector<std::string> words;
  for (const SpanRange& r : TokenizeWords(text)) {
    words.push_back(unicode::Substr(text, r.start, r.end));
  }
  EXPECT_EQ(words, (std::vector<std::string>{"I'm", "a", "23-year-old", ",", "from",
                                             "N.Y", ".", "!"}));
  EXPECT_EQ(SplitWhitespace("  a  b\tc\n"), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(RecordsTest, DocumentAndSpanRoundTrip) {
  Document d;
  d.id = "c1";
  d.kind = DocumentKind::kComment;
  d.text = "my dog";
  d.parent_id = "b1";
  d.thread_id = "t1";
  const Document back = DocumentFromJson(ToJson(d));
  EXPECT_EQ(back.id, d.id);
  EXPECT_EQ(back.kind, d.kind);
  EXPECT_EQ(back.parent_id, d.parent_id);
  EXPECT_EQ(back.thread_id, d.thread_id);

  const DisclosureSpan s = MakeSpan("c1", d.text, 0, 6, Category::kPet);
  EXPECT_EQ(SpanFromJson(ToJson(s)), s);
}

TEST(RecordsTest, ParentOnlyOnComments) {
  Json j = {{"id", "b"}, {"kind", "body"}, {"text", "x"}, {"parent_id", "a"},
            {"thread_id", "t"}};
  EXPECT_THROW(DocumentFromJson(j), InputError);
}

TEST(JsonlTest, AtomicWriteAndLineErrors) {
  testing::TempDir dir;
  const std::string path = dir.Path("out.jsonl");
  WriteJsonlAtomic(path, {Json{{"a", 1}}, Json{{"b", 2}}});
  EXPECT_EQ(testing::ReadText(path), "{\"a\":1}\n{\"b\":2}\n");
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir.root()),
                          std::filesystem::directory_iterator{}),
            1);
  testing::WriteText(path, "{\"a\":1}\n\n{oops\n");
  try {
    ReadJsonl(path);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), std::nullopt);  // rewrapped with the path
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ConfigTest, FileEnvironmentAndDefaults) {
  testing::TempDir dir;
  testing::WriteText(dir.Path("c.json"),
                     R"({"detection": {"tagger": "oracle"}, "llm.max_retries": 5})");
  Config config = Config::FromFile(dir.Path("c.json"));
  EXPECT_EQ(config.GetString("detection.tagger", "rules"), "oracle");
  EXPECT_EQ(config.GetInt("llm.max_retries", 3), 5);
  EXPECT_EQ(config.GetInt("llm.max_concurrency", 4), 4);
  ::setenv("SDTK_DETECTION_TAGGER", "none", 1);
  config.ApplyEnvironment(KnownConfigKeys());
  ::unsetenv("SDTK_DETECTION_TAGGER");
  EXPECT_EQ(config.GetString("detection.tagger", "rules"), "none");
}

TEST(AssetsTest, PromptsAndRulesAreEmbedded) {
  EXPECT_TRUE(FindAsset("prompts/three_span_e2e.txt").has_value());
  EXPECT_TRUE(FindAsset("rules/contact_rules.json").has_value());
  EXPECT_FALSE(FindAsset("prompts/missing.txt").has_value());
  EXPECT_THROW(GetAsset("nope"), ConfigError);
}

TEST(ErrorsTest, KindsMapToExitCodes) {
  EXPECT_EQ(static_cast<int>(InputError("x").kind()), 2);
  EXPECT_EQ(static_cast<int>(ConfigError("x").kind()), 3);
  EXPECT_EQ(static_cast<int>(PluginError("x", "d#0").kind()), 3);
  EXPECT_EQ(static_cast<int>(ProviderError(ProviderFailure::kTimeout, "x").kind()), 4);
  EXPECT_TRUE(ProviderError(ProviderFailure::kRateLimit, "x").retryable());
  EXPECT_FALSE(ProviderError(ProviderFailure::kAuth, "x").retryable());
}

}  // namespace
}  // namespace sdtk
