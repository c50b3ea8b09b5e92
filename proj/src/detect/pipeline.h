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

#ifndef SDTK_DETECT_PIPELINE_H_
#define SDTK_DETECT_PIPELINE_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "core/config.h"
#include "core/types.h"
#include "detect/plugins.h"
#include "detect/regex_rules.h"
#include "detect/segment.h"

namespace sdtk::detect {

// segment -> tag -> decode, plus the Name/Contact fallback, then MergeSpans.
// Immutable after construction. Detect() may run concurrently; plugins that
// are not concurrent_safe() are called under a per-plugin lock.
class DetectionPipeline {
 public:
  struct Parts {
    std::unique_ptr<Tagger> tagger;
    std::unique_ptr<SentenceGate> gate;
    std::unique_ptr<PersonRecognizer> recognizer;  // null disables Name
    RegexRuleSet contact_rules;
    SegmentStrategy strategy = SegmentStrategy::kSentence;
  };

  explicit DetectionPipeline(Parts parts);

  // Config keys: detection.strategy (default "sentence"), detection.tagger
  // ("rules"), detection.gate ("keyword"), detection.ner ("pattern"),
  // detection.contact_rules_path (embedded rules when unset).
  static std::unique_ptr<DetectionPipeline> Create(
      const Config& config,
      const PluginRegistry& registry = PluginRegistry::Global());

  // Throws InputError on empty text and PluginError, carrying the chunk id,
  // when the tagger fails or returns malformed output.
  AnnotationSet Detect(const Document& doc) const;

  // Plugin name -> version string.
  std::map<std::string, std::string> ModelVersions() const;

  SegmentStrategy strategy() const { return parts_.strategy; }

 private:
  TaggerOutput RunTagger(const Chunk& chunk) const;

  Parts parts_;
  mutable std::mutex tagger_mu_;
  mutable std::mutex gate_mu_;
  mutable std::mutex recognizer_mu_;
  std::unique_ptr<SentenceGate> locked_gate_;
  std::unique_ptr<PersonRecognizer> locked_recognizer_;
};

}  // namespace sdtk::detect

#endif  // SDTK_DETECT_PIPELINE_H_
