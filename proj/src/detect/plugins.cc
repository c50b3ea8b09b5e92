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

#include "detect/plugins.h"

#include "core/errors.h"
#include "core/jsonl.h"
#include "detect/builtin_plugins.h"
#include "detect/regex_rules.h"

namespace sdtk::detect {
namespace {

template <typename T>
std::unique_ptr<T> Make(const std::map<std::string, PluginRegistry::Factory<T>>& m,
                        const std::string& kind, const std::string& name,
                        const Config& config) {
  auto it = m.find(name);
  if (it == m.end()) throw ConfigError("unknown " + kind + " '" + name + "'");
  try {
    return it->second(config);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(kind + " '" + name + "' failed to load: " + e.what());
  }
}

std::string PluginUrl(const Config& config) {
  auto url = config.GetOptionalString("detection.plugin_url");
  if (!url || url->empty()) {
    throw ConfigError("http plugins need detection.plugin_url");
  }
  return *url;
}

double PluginTimeout(const Config& config) {
  return config.GetDouble("detection.plugin_timeout_s", 30.0);
}

}  // namespace

PluginRegistry& PluginRegistry::Global() {
  static PluginRegistry* registry = [] {
    auto* r = new PluginRegistry();
    RegisterBuiltinPlugins(r);
    return r;
  }();
  return *registry;
}

void PluginRegistry::RegisterTagger(const std::string& name,
                                    Factory<Tagger> factory) {
  taggers_[name] = std::move(factory);
}

void PluginRegistry::RegisterGate(const std::string& name,
                                  Factory<SentenceGate> factory) {
  gates_[name] = std::move(factory);
}

void PluginRegistry::RegisterRecognizer(const std::string& name,
                                        Factory<PersonRecognizer> factory) {
  recognizers_[name] = std::move(factory);
}

std::unique_ptr<Tagger> PluginRegistry::MakeTagger(const std::string& name,
                                                   const Config& config) const {
  return Make(taggers_, "tagger", name, config);
}

std::unique_ptr<SentenceGate> PluginRegistry::MakeGate(
    const std::string& name, const Config& config) const {
  return Make(gates_, "gate", name, config);
}

std::unique_ptr<PersonRecognizer> PluginRegistry::MakeRecognizer(
    const std::string& name, const Config& config) const {
  return Make(recognizers_, "recognizer", name, config);
}

std::vector<std::string> PluginRegistry::TaggerNames() const {
  std::vector<std::string> names;
  for (const auto& [k, v] : taggers_) names.push_back(k);
  return names;
}

void RegisterBuiltinPlugins(PluginRegistry* registry) {
  registry->RegisterTagger("none", [](const Config&) {
    return std::make_unique<NullTagger>();
  });
  registry->RegisterTagger("rules", [](const Config& c) {
    return std::make_unique<RulesTagger>(RegexRuleSet::Load(
        c.GetString("detection.tagger_rules_path", ""), "rules/tagger_rules.json"));
  });
  registry->RegisterTagger("oracle", [](const Config& c) -> std::unique_ptr<Tagger> {
    auto path = c.GetOptionalString("detection.oracle_gold_path");
    if (!path) throw ConfigError("oracle tagger needs detection.oracle_gold_path");
    return std::make_unique<OracleTagger>(ReadSpans(*path));
  });
  registry->RegisterTagger("http", [](const Config& c) {
    return MakeHttpTagger(PluginUrl(c), PluginTimeout(c));
  });

  registry->RegisterGate("always", [](const Config&) {
    return std::make_unique<ConstantGate>(true);
  });
  registry->RegisterGate("never", [](const Config&) {
    return std::make_unique<ConstantGate>(false);
  });
  registry->RegisterGate("keyword", [](const Config&) {
    return std::make_unique<KeywordGate>();
  });
  registry->RegisterGate("http", [](const Config& c) {
    return MakeHttpGate(PluginUrl(c), PluginTimeout(c));
  });

  registry->RegisterRecognizer("none", [](const Config&) {
    return std::unique_ptr<PersonRecognizer>();
  });
  registry->RegisterRecognizer("pattern", [](const Config& c) {
    return std::make_unique<PatternRecognizer>(RegexRuleSet::Load(
        c.GetString("detection.name_patterns_path", ""), "rules/name_patterns.json"));
  });
  registry->RegisterRecognizer("http", [](const Config& c) {
    return MakeHttpRecognizer(PluginUrl(c), PluginTimeout(c));
  });
}

}  // namespace sdtk::detect
