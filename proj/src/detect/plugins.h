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

#ifndef SDTK_DETECT_PLUGINS_H_
#define SDTK_DETECT_PLUGINS_H_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/config.h"
#include "core/span.h"
#include "detect/bio.h"
#include "detect/segment.h"

namespace sdtk::detect {

struct TaggerOutput {
  std::vector<SpanRange> tokens;  // code point offsets within the chunk
  std::vector<BioLabel> labels;   // one per token
};

// Sequence tagger over the 17 model-detected categories. Implementations
// that map subword predictions back to words (first-subtoken convention) do
// so internally; the pipeline only sees word-level labels.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual TaggerOutput Tag(const Chunk& chunk) const = 0;
  virtual std::string version() const = 0;
  // When false the pipeline serializes calls behind a mutex.
  virtual bool concurrent_safe() const { return true; }
};

// Sentence-level binary classifier: does the sentence self-disclose?
class SentenceGate {
 public:
  virtual ~SentenceGate() = default;
  virtual bool ContainsDisclosure(std::string_view sentence) const = 0;
  virtual std::string version() const = 0;
  virtual bool concurrent_safe() const { return true; }
};

// Person-entity recognizer for the Name fallback.
class PersonRecognizer {
 public:
  virtual ~PersonRecognizer() = default;
  virtual std::vector<SpanRange> FindPersons(std::string_view text) const = 0;
  virtual std::string version() const = 0;
  virtual bool concurrent_safe() const { return true; }
};

// Name-keyed factories. Global() comes with the built-in plugins registered:
//   taggers:     none, rules, oracle, http
//   gates:       always, never, keyword, http
//   recognizers: none, pattern, http
// "none" as a recognizer yields a null pointer, which disables the Name
// fallback.
class PluginRegistry {
 public:
  template <typename T>
  using Factory = std::function<std::unique_ptr<T>(const Config&)>;

  static PluginRegistry& Global();

  void RegisterTagger(const std::string& name, Factory<Tagger> factory);
  void RegisterGate(const std::string& name, Factory<SentenceGate> factory);
  void RegisterRecognizer(const std::string& name,
                          Factory<PersonRecognizer> factory);

  // Throw ConfigError for unknown names.
  std::unique_ptr<Tagger> MakeTagger(const std::string& name,
                                     const Config& config) const;
  std::unique_ptr<SentenceGate> MakeGate(const std::string& name,
                                         const Config& config) const;
  std::unique_ptr<PersonRecognizer> MakeRecognizer(const std::string& name,
                                                   const Config& config) const;

  std::vector<std::string> TaggerNames() const;

 private:
  std::map<std::string, Factory<Tagger>> taggers_;
  std::map<std::string, Factory<SentenceGate>> gates_;
  std::map<std::string, Factory<PersonRecognizer>> recognizers_;
};

// Registers the built-in plugins into `registry`.
void RegisterBuiltinPlugins(PluginRegistry* registry);

}  // namespace sdtk::detect

#endif  // SDTK_DETECT_PLUGINS_H_
