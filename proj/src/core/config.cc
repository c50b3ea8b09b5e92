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

#include "core/config.h"

#include <cstdlib>

#include "core/errors.h"
#include "core/jsonl.h"

namespace sdtk {
namespace {

void Flatten(const Json& node, const std::string& prefix,
             std::map<std::string, Json>* out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) {
      Flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    }
    return;
  }
  (*out)[prefix] = node;
}

std::string EnvName(const std::string& key) {
  std::string name = "SDTK_";
  for (char c : key) {
    name.push_back(c == '.' ? '_' : static_cast<char>(std::toupper(
                                        static_cast<unsigned char>(c))));
  }
  return name;
}

// Environment values are strings; coerce obvious scalars.
Json ParseEnvValue(const std::string& raw) {
  if (raw == "true") return true;
  if (raw == "false") return false;
  try {
    std::size_t used = 0;
    long long i = std::stoll(raw, &used);
    if (used == raw.size()) return i;
    double d = std::stod(raw, &used);
    if (used == raw.size()) return d;
  } catch (const std::exception&) {
  }
  if (!raw.empty() && raw.front() == '[') {
    try {
      return Json::parse(raw);
    } catch (const Json::exception&) {
    }
  }
  return raw;
}

}  // namespace

Config Config::FromJson(const Json& doc) {
  if (!doc.is_object()) throw ParseError("config must be a JSON object");
  Config config;
  Flatten(doc, "", &config.values_);
  return config;
}

Config Config::FromFile(const std::string& path) {
  try {
    return FromJson(Json::parse(ReadFile(path)));
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void Config::ApplyEnvironment(const std::vector<std::string>& known_keys) {
  std::vector<std::string> keys = known_keys;
  for (const auto& [k, v] : values_) keys.push_back(k);
  for (const auto& key : keys) {
    if (const char* env = std::getenv(EnvName(key).c_str())) {
      values_[key] = ParseEnvValue(env);
    }
  }
}

bool Config::Has(const std::string& key) const {
  auto it = values_.find(key);
  return it != values_.end() && !it->second.is_null();
}

std::string Config::GetString(const std::string& key,
                              const std::string& fallback) const {
  return GetOptionalString(key).value_or(fallback);
}

std::optional<std::string> Config::GetOptionalString(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end() || it->second.is_null()) return std::nullopt;
  if (it->second.is_string()) return it->second.get<std::string>();
  return it->second.dump();
}

long long Config::GetInt(const std::string& key, long long fallback) const {
  auto it = values_.find(key);
  if (it == values_.end() || it->second.is_null()) return fallback;
  if (it->second.is_number_integer()) return it->second.get<long long>();
  if (it->second.is_string()) {
    try {
      return std::stoll(it->second.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("config key " + key + " must be an integer");
}

double Config::GetDouble(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end() || it->second.is_null()) return fallback;
  if (it->second.is_number()) return it->second.get<double>();
  if (it->second.is_string()) {
    try {
      return std::stod(it->second.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("config key " + key + " must be a number");
}

bool Config::GetBool(const std::string& key, bool fallback) const {
  auto it = values_.find(key);
  if (it == values_.end() || it->second.is_null()) return fallback;
  if (it->second.is_boolean()) return it->second.get<bool>();
  if (it->second.is_string()) {
    const auto& s = it->second.get_ref<const std::string&>();
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
  }
  throw ParseError("config key " + key + " must be a boolean");
}

std::vector<std::string> Config::GetStringList(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end() || it->second.is_null()) return {};
  if (it->second.is_string()) {
    // Comma-separated form, convenient for environment overrides.
    std::vector<std::string> out;
    const auto& s = it->second.get_ref<const std::string&>();
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      if (comma > pos) out.push_back(s.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return out;
  }
  if (!it->second.is_array()) {
    throw ParseError("config key " + key + " must be a list of strings");
  }
  std::vector<std::string> out;
  for (const auto& v : it->second) {
    if (!v.is_string()) throw ParseError("config key " + key + " must be a list of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

const std::vector<std::string>& KnownConfigKeys() {
  static const std::vector<std::string> kKeys = {
      "detection.strategy",
      "detection.tagger",
      "detection.gate",
      "detection.ner",
      "detection.contact_rules_path",
      "detection.tagger_rules_path",
      "detection.oracle_gold_path",
      "detection.plugin_url",
      "detection.plugin_timeout_s",
      "detection.name_patterns_path",
      "llm.provider",
      "llm.model_id",
      "llm.max_concurrency",
      "llm.cache_dir",
      "llm.log_prompts",
      "llm.max_tokens",
      "llm.max_retries",
      "llm.backoff_ms",
      "llm.timeout_s",
      "llm.stub_responses_path",
      "llm.replay",
      "abstract.with_thought",
      "abstract.sampling_temperature",
      "abstract.temperature",
      "importance.with_thought",
      "importance.max_attempts",
      "corpus.langid",
      "corpus.langid_field",
      "service.port",
      "service.host",
      "service.cors_origins",
      "service.token",
  };
  return kKeys;
}

}  // namespace sdtk
