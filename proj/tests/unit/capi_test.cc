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

// Exercises the shared library through its C header only.

#include "sdtk/sdtk.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

std::string Take(char* s) {
  std::string out = s ? s : "";
  sdtk_free(s);
  return out;
}

std::string Fixture(const std::string& rel) { return std::string(SDTK_FIXTURE_DIR) + "/" + rel; }

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sdtk_capi_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    Write("stub.json",
          R"({"responses": {"three_span_e2e": ["{\"span 1\": \"a job\", \"span 2\": \"a field\", \"span 3\": \"work\"}"]},
              "default": "{\"Importance\": \"Moderate\"}"})");
    const Json overrides = {{"llm.provider", "stub"},
                            {"llm.stub_responses_path", Path("stub.json")}};
    ASSERT_EQ(sdtk_context_create(nullptr, overrides.dump().c_str(), &ctx_), SDTK_OK)
        << sdtk_last_error();
  }
  void TearDown() override {
    sdtk_context_destroy(ctx_);
    fs::remove_all(dir_);
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  void Write(const std::string& name, const std::string& text) {
    std::ofstream(Path(name)) << text;
  }
  std::string Read(const std::string& name) const {
    std::ifstream in(Path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::size_t Lines(const std::string& name) const {
    std::size_t n = 0;
    std::istringstream in(Read(name));
    for (std::string line; std::getline(in, line);) n += !line.empty();
    return n;
  }

  fs::path dir_;
  sdtk_context* ctx_ = nullptr;
};

TEST_F(CApiTest, VersionAndErrors) {
  EXPECT_STREQ(sdtk_version(), "0.1.0");
  char* out = nullptr;
  EXPECT_EQ(sdtk_detect_text(ctx_, "", &out), SDTK_ERR_INPUT);
  EXPECT_EQ(out, nullptr);
  EXPECT_NE(std::string(sdtk_last_error()).find("empty"), std::string::npos);
  const Json err = Json::parse(sdtk_last_error_json());
  EXPECT_EQ(err["kind"], "input");
  EXPECT_EQ(sdtk_detect_text(nullptr, "x", &out), SDTK_ERR_INPUT);

  sdtk_context* bad = nullptr;
  EXPECT_EQ(sdtk_context_create("/no/such/config.json", nullptr, &bad), SDTK_ERR_INPUT);
  EXPECT_EQ(bad, nullptr);
  EXPECT_EQ(sdtk_context_create(nullptr, "[1]", &bad), SDTK_ERR_INPUT);
  EXPECT_EQ(sdtk_context_create(nullptr, R"({"detection.tagger": "nope"})", &bad), SDTK_OK);
  EXPECT_EQ(sdtk_detect_text(bad, "hello", &out), SDTK_ERR_PLUGIN);
  sdtk_context_destroy(bad);
}

TEST_F(CApiTest, DetectTextAndApply) {
  char* out = nullptr;
  ASSERT_EQ(sdtk_detect_text(ctx_, "xxx is my ig", &out), SDTK_OK);
  const Json detected = Json::parse(Take(out));
  ASSERT_EQ(detected["spans"].size(), 1u);
  EXPECT_EQ(detected["spans"][0]["category"], "Contact");

  ASSERT_EQ(sdtk_apply_edit("I live in Ohio.", 10, 14, "the Midwest", &out), SDTK_OK);
  const Json edit = Json::parse(Take(out));
  EXPECT_EQ(edit["new_text"], "I live in the Midwest.");
  EXPECT_EQ(edit["new_end"], 21);
  EXPECT_EQ(sdtk_apply_edit("abc", 2, 9, "x", &out), SDTK_ERR_INPUT);
}

TEST_F(CApiTest, HandleRequest) {
  int status = 0;
  char* body = nullptr;
  ASSERT_EQ(sdtk_handle_request(ctx_, "GET", "/v1/taxonomy", nullptr, nullptr, nullptr,
                                &status, &body),
            SDTK_OK);
  EXPECT_EQ(status, 200);
  EXPECT_EQ(Json::parse(Take(body)).size(), 19u);
  ASSERT_EQ(sdtk_handle_request(ctx_, "POST", "/v1/detect", R"({"rate": "true"})",
                                R"({"text": "xxx is my ig"})", nullptr, &status, &body),
            SDTK_OK);
  EXPECT_EQ(status, 200);
  const Json rated = Json::parse(Take(body));
  ASSERT_EQ(rated["ratings"].size(), 1u);
  EXPECT_EQ(rated["ratings"][0]["level"], "Moderate");
  ASSERT_EQ(sdtk_handle_request(ctx_, "GET", "/nope", nullptr, nullptr, nullptr, &status, &body),
            SDTK_OK);
  EXPECT_EQ(status, 404);
  sdtk_free(body);
}

TEST_F(CApiTest, BratEvalAbstractRate) {
  char* summary = nullptr;
  ASSERT_EQ(sdtk_corpus_ingest_brat(Fixture("brat").c_str(), Path("docs.jsonl").c_str(),
                                    Path("gold.jsonl").c_str(), "ann1", &summary),
            SDTK_OK)
      << sdtk_last_error();
  const Json ingest = Json::parse(Take(summary));
  EXPECT_EQ(ingest["documents"], 2);
  EXPECT_EQ(ingest["spans"], 4);

  char* table = nullptr;
  ASSERT_EQ(sdtk_eval_files(Path("gold.jsonl").c_str(), Path("gold.jsonl").c_str(),
                            Path("docs.jsonl").c_str(), Path("report.json").c_str(), &summary,
                            &table),
            SDTK_OK)
      << sdtk_last_error();
  const Json report = Json::parse(Take(summary));
  EXPECT_DOUBLE_EQ(report["partial"]["average_f1"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(report["exact"]["average_f1"].get<double>(), 1.0);
  EXPECT_NE(Take(table).find("Occupation"), std::string::npos);
  EXPECT_EQ(Json::parse(Read("report.json")), report);

  ASSERT_EQ(sdtk_detect_file(ctx_, Path("docs.jsonl").c_str(), Path("pred.jsonl").c_str(),
                             nullptr, &summary),
            SDTK_OK)
      << sdtk_last_error();
  EXPECT_EQ(Json::parse(Take(summary))["documents"], 2);

  Write("occupation.jsonl", [&] {
    std::istringstream in(Read("gold.jsonl"));
    std::string out;
    for (std::string line; std::getline(in, line);) {
      if (line.find("Occupation") != std::string::npos) out += line + "\n";
    }
    return out;
  }());
  ASSERT_EQ(sdtk_abstract_file(ctx_, Path("occupation.jsonl").c_str(),
                               Path("docs.jsonl").c_str(), "end_to_end",
                               Path("abs.jsonl").c_str(), &summary),
            SDTK_OK)
      << sdtk_last_error();
  const Json abs = Json::parse(Take(summary));
  EXPECT_EQ(abs["complete"], 1);
  const Json record = Json::parse(Read("abs.jsonl"));
  EXPECT_EQ(record["candidates"], Json::array({"a job", "a field", "work"}));

  ASSERT_EQ(sdtk_rate_file(ctx_, Path("gold.jsonl").c_str(), Path("docs.jsonl").c_str(),
                           Path("ratings.jsonl").c_str(), &summary),
            SDTK_OK)
      << sdtk_last_error();
  EXPECT_EQ(Json::parse(Take(summary))["spans"], 4);
  EXPECT_EQ(Lines("ratings.jsonl"), 4u);
}

TEST_F(CApiTest, CorpusFilters) {
  char* summary = nullptr;
  ASSERT_EQ(sdtk_corpus_filter_reddit(ctx_, Fixture("reddit_posts.jsonl").c_str(),
                                      Path("kept.jsonl").c_str(), &summary),
            SDTK_OK)
      << sdtk_last_error();
  const Json reddit = Json::parse(Take(summary));
  EXPECT_EQ(reddit["kept"], 7);
  EXPECT_EQ(Lines("kept.jsonl"), 7u);

  ASSERT_EQ(sdtk_corpus_filter_sharegpt(Fixture("sharegpt_turns.jsonl").c_str(),
                                        Path("turns.jsonl").c_str(), 500, &summary),
            SDTK_OK);
  EXPECT_EQ(Json::parse(Take(summary))["kept"], 1);
  EXPECT_EQ(Lines("turns.jsonl"), 1u);

  ASSERT_EQ(sdtk_corpus_split(Fixture("reddit_posts.jsonl").c_str(), Path("split").c_str(),
                              R"({"counts": [6, 2, 2], "seed": 3})", &summary),
            SDTK_OK)
      << sdtk_last_error();
  const Json split = Json::parse(Take(summary));
  EXPECT_EQ(split["train"]["threads"], 6);
  EXPECT_EQ(Lines("split/train.jsonl") + Lines("split/dev.jsonl") + Lines("split/test.jsonl"),
            10u);
  EXPECT_EQ(sdtk_corpus_split(Fixture("reddit_posts.jsonl").c_str(), Path("split").c_str(),
                              R"({"counts": [9, 2, 2]})", &summary),
            SDTK_ERR_INPUT);

  ASSERT_EQ(sdtk_corpus_sample(Fixture("reddit_posts.jsonl").c_str(),
                               Path("sample.jsonl").c_str(), 4, 1, 1, &summary),
            SDTK_OK);
  EXPECT_EQ(Json::parse(Take(summary))["sampled"], 4);
}

TEST_F(CApiTest, ProviderFailureStatus) {
  Write("stub_bad.json", R"({"responses": {}})");
  const Json overrides = {{"llm.provider", "stub"},
                          {"llm.stub_responses_path", Path("stub_bad.json")}};
  sdtk_context* ctx = nullptr;
  ASSERT_EQ(sdtk_context_create(nullptr, overrides.dump().c_str(), &ctx), SDTK_OK);
  Write("docs.jsonl",
        R"({"id": "d", "kind": "body", "text": "I am a nurse.", "thread_id": "d"})" "\n");
  Write("spans.jsonl",
        R"({"doc_id": "d", "start": 7, "end": 12, "category": "Occupation", "text": "nurse"})"
        "\n");
  char* summary = nullptr;
  EXPECT_EQ(sdtk_rate_file(ctx, Path("spans.jsonl").c_str(), Path("docs.jsonl").c_str(),
                           Path("r.jsonl").c_str(), &summary),
            SDTK_ERR_PROVIDER);
  EXPECT_EQ(Json::parse(sdtk_last_error_json())["kind"], "provider");
  sdtk_context_destroy(ctx);
}

}  // namespace
