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

#include "detect/pipeline.h"

#include "core/errors.h"
#include "core/unicode.h"
#include "detect/bio.h"
#include "detect/fallback.h"
#include "detect/merge.h"

namespace sdtk::detect {
namespace {

class LockedGate : public SentenceGate {
 public:
  LockedGate(const SentenceGate* inner, std::mutex* mu) : inner_(inner), mu_(mu) {}
  bool ContainsDisclosure(std::string_view sentence) const override {
    std::lock_guard<std::mutex> lock(*mu_);
    return inner_->ContainsDisclosure(sentence);
  }
  std::string version() const override { return inner_->version(); }

 private:
  const SentenceGate* inner_;
  std::mutex* mu_;
};

class LockedRecognizer : public PersonRecognizer {
 public:
  LockedRecognizer(const PersonRecognizer* inner, std::mutex* mu)
      : inner_(inner), mu_(mu) {}
  std::vector<SpanRange> FindPersons(std::string_view text) const override {
    std::lock_guard<std::mutex> lock(*mu_);
    return inner_->FindPersons(text);
  }
  std::string version() const override { return inner_->version(); }

 private:
  const PersonRecognizer* inner_;
  std::mutex* mu_;
};

void CheckTaggerOutput(const TaggerOutput& out, const Chunk& chunk) {
  if (out.tokens.size() != out.labels.size()) {
    throw PluginError("tagger returned " + std::to_string(out.labels.size()) +
                          " labels for " + std::to_string(out.tokens.size()) +
                          " tokens",
                      chunk.id());
  }
  const std::size_t len = unicode::CodepointCount(chunk.text);
  std::size_t prev_end = 0;
  for (const SpanRange& t : out.tokens) {
    if (t.empty() || t.end > len || t.start < prev_end) {
      throw PluginError("tagger returned bad token [" + std::to_string(t.start) +
                            ", " + std::to_string(t.end) + ")",
                        chunk.id());
    }
    prev_end = t.end;
  }
  for (const BioLabel& l : out.labels) {
    if (!l.is_outside() && !IsTaggerCategory(l.category)) {
      throw PluginError("tagger emitted reserved label " + BioLabelName(l),
                        chunk.id());
    }
  }
}

}  // namespace

DetectionPipeline::DetectionPipeline(Parts parts) : parts_(std::move(parts)) {
  if (!parts_.tagger) throw ConfigError("pipeline needs a tagger");
  if (!parts_.gate) throw ConfigError("pipeline needs a sentence gate");
  if (!parts_.gate->concurrent_safe()) {
    locked_gate_ = std::make_unique<LockedGate>(parts_.gate.get(), &gate_mu_);
  }
  if (parts_.recognizer && !parts_.recognizer->concurrent_safe()) {
    locked_recognizer_ = std::make_unique<LockedRecognizer>(
        parts_.recognizer.get(), &recognizer_mu_);
  }
}

std::unique_ptr<DetectionPipeline> DetectionPipeline::Create(
    const Config& config, const PluginRegistry& registry) {
  Parts parts;
  parts.strategy =
      ParseSegmentStrategy(config.GetString("detection.strategy", "sentence"));
  parts.tagger =
      registry.MakeTagger(config.GetString("detection.tagger", "rules"), config);
  parts.gate =
      registry.MakeGate(config.GetString("detection.gate", "keyword"), config);
  parts.recognizer = registry.MakeRecognizer(
      config.GetString("detection.ner", "pattern"), config);
  parts.contact_rules = RegexRuleSet::Load(
      config.GetString("detection.contact_rules_path", ""),
      "rules/contact_rules.json");
  return std::make_unique<DetectionPipeline>(std::move(parts));
}

TaggerOutput DetectionPipeline::RunTagger(const Chunk& chunk) const {
  try {
    if (parts_.tagger->concurrent_safe()) return parts_.tagger->Tag(chunk);
    std::lock_guard<std::mutex> lock(tagger_mu_);
    return parts_.tagger->Tag(chunk);
  } catch (const PluginError& e) {
    if (!e.chunk_id().empty()) throw;
    throw PluginError(e.what(), chunk.id());
  } catch (const std::exception& e) {
    throw PluginError(std::string("tagger failed: ") + e.what(), chunk.id());
  }
}

AnnotationSet DetectionPipeline::Detect(const Document& doc) const {
  if (doc.text.empty()) {
    throw InputError("document '" + doc.id + "' has empty text");
  }
  doc.Validate();

  std::vector<DisclosureSpan> spans;
  for (const Chunk& chunk : Segment(doc, parts_.strategy)) {
    const TaggerOutput out = RunTagger(chunk);
    CheckTaggerOutput(out, chunk);
    for (DisclosureSpan& s : DecodeBio(out.labels, out.tokens, chunk)) {
      s.doc_id = doc.id;
      spans.push_back(std::move(s));
    }
  }

  const SentenceGate& gate = locked_gate_ ? *locked_gate_ : *parts_.gate;
  for (DisclosureSpan& s :
       DetectContact(doc.id, doc.text, parts_.contact_rules, gate)) {
    spans.push_back(std::move(s));
  }
  if (parts_.recognizer) {
    const PersonRecognizer* rec = locked_recognizer_
                                      ? locked_recognizer_.get()
                                      : parts_.recognizer.get();
    for (DisclosureSpan& s : DetectName(doc.id, doc.text, rec, gate)) {
      spans.push_back(std::move(s));
    }
  }

  AnnotationSet set;
  set.doc_id = doc.id;
  set.annotator_id = parts_.tagger->version();
  set.layer = Layer::kPredicted;
  set.spans = MergeSpans(std::move(spans));
  for (const DisclosureSpan& s : set.spans) CheckSpan(s, doc.text);
  return set;
}

std::map<std::string, std::string> DetectionPipeline::ModelVersions() const {
  std::map<std::string, std::string> v;
  v["tagger"] = parts_.tagger->version();
  v["gate"] = parts_.gate->version();
  v["ner"] = parts_.recognizer ? parts_.recognizer->version() : "none";
  v["contact_rules"] = parts_.contact_rules.version();
  v["segmentation"] = std::string(SegmentStrategyName(parts_.strategy));
  return v;
}

}  // namespace sdtk::detect
