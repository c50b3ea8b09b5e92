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

#ifndef SDTK_CORE_CONFIG_H_
#define SDTK_CORE_CONFIG_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/records.h"

namespace sdtk {

// Flat key-value configuration. A JSON document such as
//   {"detection": {"strategy": "sentence"}, "llm.model_id": "x"}
// flattens to the keys "detection.strategy" and "llm.model_id". Environment
// variables SDTK_<KEY> (upper case, '.' replaced by '_') override file values.
class Config {
 public:
  Config() = default;

  static Config FromJson(const Json& doc);
  static Config FromFile(const std::string& path);

  // Applies SDTK_* overrides for every key in `known_keys` plus any key
  // already present.
  void ApplyEnvironment(const std::vector<std::string>& known_keys);

  void Set(const std::string& key, Json value) { values_[key] = std::move(value); }
  bool Has(const std::string& key) const;

  std::string GetString(const std::string& key, const std::string& fallback) const;
  std::optional<std::string> GetOptionalString(const std::string& key) const;
  long long GetInt(const std::string& key, long long fallback) const;
  double GetDouble(const std::string& key, double fallback) const;
  bool GetBool(const std::string& key, bool fallback) const;
  std::vector<std::string> GetStringList(const std::string& key) const;

  const std::map<std::string, Json>& values() const { return values_; }

 private:
  std::map<std::string, Json> values_;
};

// Every key the toolkit reads, used for environment overrides and help text.
const std::vector<std::string>& KnownConfigKeys();

}  // namespace sdtk

#endif  // SDTK_CORE_CONFIG_H_
