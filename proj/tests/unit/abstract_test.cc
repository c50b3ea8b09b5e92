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

#include <filesystem>

#include "abstract/generate.h"
#include "abstract/parse.h"
#include "abstract/prompt.h"
#include "abstract/validate.h"
#include "core/errors.h"
#include "core/jsonl.h"
#include "llm/client.h"
#include "llm/provider.h"
#include "test_util.h"

namespace sdtk::abstract {
namespace {

using llm::CompletionRequest;
using llm::CompletionResponse;
using llm::StubProvider;

std::unique_ptr<llm::LlmClient> ClientFor(std::shared_ptr<StubProvider> stub) {
  llm::ClientOptions options;
  options.sleep = [](std::chrono::milliseconds) {};
  return std::make_unique<llm::LlmClient>(std::move(stub), options);
}

std::shared_ptr<StubProvider> Replies(std::vector<std::string> replies) {
  return std::make_shared<StubProvider>(
      [replies](const CompletionRequest&, int call) {
        return CompletionResponse{replies[std::min<std::size_t>(call, replies.size() - 1)]};
      });
}

TEST(RenderTest, FormatSemantics) {
  EXPECT_EQ(Render("{a} and {{b}} {a}", {{"a", "x{y}"}}), "x{y} and {b} x{y}");
  try {
    Render("{sentence} {span}", {{"sentence", "s"}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("'span'"), std::string::npos);
  }
  EXPECT_THROW(Render("{a", {{"a", "x"}}), ParseError);
  EXPECT_THROW(Render("a}", {}), ParseError);
  EXPECT_EQ(Placeholders("{x} {y} {x} {{z}}"), (std::vector<std::string>{"x", "y"}));
  EXPECT_THROW(TemplateText("no_such_template"), ConfigError);
}

TEST(RenderTest, GoldenPrompts) {
  const Json bindings = Json::parse(testing::ReadText(std::string(SDTK_GOLDEN_DIR) +
                                                      "/prompt_bindings.json"));
  Bindings b;
  for (auto it = bindings.begin(); it != bindings.end(); ++it) b[it.key()] = it.value();
  ASSERT_FALSE(TemplateIds().empty());
  for (const std::string& id : TemplateIds()) {
    const std::string golden =
        testing::ReadText(std::string(SDTK_GOLDEN_DIR) + "/prompts/" + id + ".txt");
    ASSERT_FALSE(golden.empty()) << id;
    EXPECT_EQ(BuildPrompt(id, b), golden) << id;
  }
  EXPECT_NE(BuildPrompt("three_span_e2e", b).find(R"({"span 1": "xxx")"), std::string::npos);
}

TEST(RenderTest, FormatExamples) {
  EXPECT_EQ(FormatExamples({}), "None");
  EXPECT_EQ(FormatExamples({"a", "b"}), "\"a\", \"b\"");
}

TEST(ParseTest, CandidatesWithRationaleAndFences) {
  const auto parsed = ParseCandidates(
      "The span reveals an exact age.\n```json\n{\"span 1\": \" a \", \"span 2\": \"b\", "
      "\"span 3\": \"c {x}\"}\n```",
      3);
  EXPECT_EQ(parsed.candidates, (std::vector<std::string>{"a", "b", "c {x}"}));
  EXPECT_EQ(parsed.rationale, "The span reveals an exact age.");
}

TEST(ParseTest, CandidateErrors) {
  EXPECT_THROW(ParseCandidates("no json here", 3), ParseError);
  EXPECT_THROW(ParseCandidates(R"({"span 1": "a", "span 2": "b"})", 3), ParseError);
  EXPECT_THROW(ParseCandidates(R"({"span 1": "a", "span 2": 2, "span 3": "c"})", 3),
               ParseError);
  EXPECT_EQ(ParseCandidates(R"({"span 1": "a", "span 2": " ", "span 3": "c"})", 3).candidates[1],
            "");
  EXPECT_THROW(ParseCandidates(R"({"span 1": "a", "span 2": "b", "span 3": "c", "x": 1})", 3),
               ParseError);
}

TEST(ParseTest, SingleCandidateShapes) {
  EXPECT_EQ(ParseSingleCandidate(R"({"span": "in my twenties"})").candidate, "in my twenties");
  const auto labeled = ParseSingleCandidate("It is too exact.\nGeneralized Span: \"a city\"");
  EXPECT_EQ(labeled.candidate, "a city");
  EXPECT_EQ(labeled.rationale, "It is too exact.");
  EXPECT_EQ(ParseSingleCandidate("  \"somewhere warm\"  ").candidate, "somewhere warm");
  EXPECT_THROW(ParseSingleCandidate("   "), ParseError);
}

TEST(ValidateTest, Rules) {
  const std::string s = "I just turned 23 today";
  const SpanRange span{0, 16};
  EXPECT_TRUE(ValidateAbstraction(s, span, "I recently had a birthday").accepted());
  EXPECT_FALSE(ValidateAbstraction(s, span, "i  JUST turned 23").non_trivial);
  EXPECT_FALSE(ValidateAbstraction(s, span, "   ").non_empty);
  EXPECT_FALSE(ValidateAbstraction(s, span, "line\nbreak").fits_context);
  const auto r = ValidateAbstraction(s, span, "a b c d e f g h i j k l m n o p q r");
  EXPECT_TRUE(r.overlong);
  EXPECT_TRUE(r.accepted());
  EXPECT_DOUBLE_EQ(ValidateAbstraction(s, span, "I am young").length_ratio, 3.0 / 4.0);
  EXPECT_THROW(ValidateAbstraction(s, {10, 40}, "x"), RangeError);
}

TEST(ValidateTest, NearDuplicates) {
  std::vector<ValidationReport> reports(3);
  FlagNearDuplicates({"A city", "a  city", "a town"}, &reports);
  EXPECT_TRUE(reports[0].near_duplicate);
  EXPECT_TRUE(reports[1].near_duplicate);
  EXPECT_FALSE(reports[2].near_duplicate);
}

struct Fixture {
  std::string text = "Hello there. I just turned 23 and moved to Ohio. Bye.";
  DisclosureSpan span = MakeSpan("d", text, 13, 29, Category::kAge);
  SentenceContext sentence = LocateSentence(text, span);
};

TEST(GenerateTest, LocateSentence) {
  Fixture f;
  EXPECT_EQ(f.sentence.text, "I just turned 23 and moved to Ohio.");
  EXPECT_EQ(f.sentence.offset, 13u);
  const auto across = MakeSpan("d", f.text, 6, 20, Category::kAge);
  EXPECT_THROW(LocateSentence(f.text, across), InputError);
}

TEST(GenerateTest, EndToEndSingleCall) {
  Fixture f;
  auto stub = Replies({"Too exact.\n{\"span 1\": \"I recently had a birthday\", \"span 2\": "
                       "\"I am in my twenties\", \"span 3\": \"I am a young adult\"}"});
  auto client = ClientFor(stub);
  GenerateOptions options;
  const AbstractionSet set = GenerateAbstractions(f.span, f.sentence, options, *client);
  EXPECT_EQ(stub->calls(), 1);
  EXPECT_EQ(set.candidates.size(), 3u);
  EXPECT_EQ(set.rationale, "Too exact.");
  EXPECT_EQ(set.per_candidate_validation.size(), 3u);
  EXPECT_EQ(stub->requests()[0].template_id, "three_span_e2e");
  EXPECT_DOUBLE_EQ(stub->requests()[0].params.temperature, 0.3);
  EXPECT_EQ(stub->requests()[0].rendered_prompt,
            BuildPrompt("three_span_e2e", {{"sentence", f.sentence.text},
                                           {"span", "I just turned 23"}}));
}

TEST(GenerateTest, EndToEndRegeneratesOnceThenReportsPartial) {
  Fixture f;
  auto stub = Replies({R"({"span 1": "I just turned 23", "span 2": "I am young", "span 3": ""})",
                       "garbage"});
  auto client = ClientFor(stub);
  try {
    GenerateAbstractions(f.span, f.sentence, GenerateOptions{}, *client);
    FAIL();
  } catch (const PartialResultError& e) {
    EXPECT_EQ(e.valid(), (std::vector<std::string>{"I am young"}));
  }
  EXPECT_EQ(stub->calls(), 2);
}

TEST(GenerateTest, SamplingUsesDistinctSamples) {
  Fixture f;
  auto stub = Replies({"a teen", "a young adult", "someone in their twenties"});
  auto client = ClientFor(stub);
  GenerateOptions options;
  options.strategy = Strategy::kSampling;
  const auto set = GenerateAbstractions(f.span, f.sentence, options, *client);
  EXPECT_EQ(set.candidates, (std::vector<std::string>{"a teen", "a young adult",
                                                      "someone in their twenties"}));
  const auto requests = stub->requests();
  ASSERT_EQ(requests.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(requests[i].sample_index, i);
    EXPECT_DOUBLE_EQ(requests[i].params.temperature, 0.7);
    EXPECT_EQ(requests[i].template_id, "one_span");
  }
}

TEST(GenerateTest, SamplingKeepsDuplicatesFlagged) {
  Fixture f;
  auto client = ClientFor(Replies({"I am young"}));
  GenerateOptions options;
  options.strategy = Strategy::kSampling;
  const auto set = GenerateAbstractions(f.span, f.sentence, options, *client);
  ASSERT_EQ(set.candidates.size(), 3u);
  for (const auto& r : set.per_candidate_validation) EXPECT_TRUE(r.near_duplicate);
}

TEST(GenerateTest, IterativeListsPriorCandidates) {
  Fixture f;
  auto stub = Replies({"I am young", "I had a birthday", "I am an adult"});
  auto client = ClientFor(stub);
  GenerateOptions options;
  options.strategy = Strategy::kIterative;
  options.with_thought = false;
  GenerateAbstractions(f.span, f.sentence, options, *client);
  const auto requests = stub->requests();
  ASSERT_EQ(requests.size(), 3u);
  Bindings b = {{"sentence", f.sentence.text}, {"span", "I just turned 23"}};
  b["examples"] = "None";
  EXPECT_EQ(requests[0].rendered_prompt, BuildPrompt("iterative", b));
  b["examples"] = "\"I am young\", \"I had a birthday\"";
  EXPECT_EQ(requests[2].rendered_prompt, BuildPrompt("iterative", b));
}

TEST(GenerateTest, ProviderFailurePropagates) {
  Fixture f;
  auto stub = std::make_shared<StubProvider>([](const CompletionRequest&, int) -> CompletionResponse {
    throw ProviderError(ProviderFailure::kAuth, "bad key");
  });
  auto client = ClientFor(stub);
  EXPECT_THROW(GenerateAbstractions(f.span, f.sentence, GenerateOptions{}, *client),
               ProviderError);
}

TEST(DistillTest, ResumesAndDropsTornTail) {
  testing::TempDir dir;
  Document doc;
  doc.id = "d";
  doc.thread_id = "t";
  doc.text = "I just turned 23. My cat is old.";
  const std::vector<DisclosureSpan> gold = {MakeSpan("d", doc.text, 0, 16, Category::kAge),
                                            MakeSpan("d", doc.text, 18, 24, Category::kPet)};
  const std::string reply =
      "Rationale: exact.\n{\"span 1\": \"a\", \"span 2\": \"b\", \"span 3\": \"c\"}";
  auto stub = Replies({reply});
  auto client = ClientFor(stub);
  const std::string out = dir.Path("corpus.jsonl");
  auto summary = BuildDistillationCorpus({doc}, gold, *client, out);
  EXPECT_EQ(summary.written, 2u);
  EXPECT_FALSE(summary.provider_error.has_value());
  const auto records = ReadJsonl(out);
  ASSERT_EQ(records.size(), 2u);
  const DistillRecord first = DistillRecordFromJson(records[0]);
  EXPECT_EQ(first.sentence, "I just turned 23.");
  EXPECT_EQ(first.rationale, "exact.");
  EXPECT_EQ(first.template_id, "distill_teacher");

  // Simulate an interrupted append.
  std::string content = testing::ReadText(out);
  const auto second_line = content.find('\n') + 1;
  testing::WriteText(out, content.substr(0, second_line) + content.substr(second_line, 20));
  summary = BuildDistillationCorpus({doc}, gold, *client, out);
  EXPECT_EQ(summary.already_present, 1u);
  EXPECT_EQ(summary.written, 1u);
  EXPECT_EQ(ReadJsonl(out).size(), 2u);
  EXPECT_EQ(testing::ReadText(out), content);
}

TEST(DistillTest, ProviderErrorStopsWithPartialCorpus) {
  testing::TempDir dir;
  Document doc;
  doc.id = "d";
  doc.thread_id = "t";
  doc.text = "I just turned 23. My cat is old.";
  const std::vector<DisclosureSpan> gold = {MakeSpan("d", doc.text, 0, 16, Category::kAge),
                                            MakeSpan("d", doc.text, 18, 24, Category::kPet)};
  auto stub = std::make_shared<StubProvider>([](const CompletionRequest&, int call) {
    if (call > 0) throw ProviderError(ProviderFailure::kAuth, "revoked");
    return CompletionResponse{R"({"span 1": "a", "span 2": "b", "span 3": "c"})"};
  });
  auto client = ClientFor(stub);
  const auto summary = BuildDistillationCorpus({doc}, gold, *client, dir.Path("c.jsonl"));
  EXPECT_EQ(summary.written, 1u);
  EXPECT_TRUE(summary.provider_error.has_value());
  EXPECT_EQ(ReadJsonl(dir.Path("c.jsonl")).size(), 1u);
}

}  // namespace
}  // namespace sdtk::abstract
