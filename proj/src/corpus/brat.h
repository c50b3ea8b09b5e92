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

#ifndef SDTK_CORPUS_BRAT_H_
#define SDTK_CORPUS_BRAT_H_

#include <string>
#include <string_view>
#include <vector>

#include "core/types.h"

namespace sdtk::corpus {

// Parses BRAT standoff text-bound annotations
//   T<k>\t<Category> <start> <end>\t<surface>
// against `doc_text`. Offsets are code points. Attribute, relation, event,
// note and comment lines are ignored. Errors (malformed line, unknown
// category, discontinuous span, offset out of range, surface mismatch) are
// ParseErrors naming the 1-based line. Spans come back sorted.
AnnotationSet ParseBrat(std::string_view ann_text, std::string_view doc_text,
                        const std::string& doc_id,
                        const std::string& annotator_id = "",
                        Layer layer = Layer::kGold);

// T lines numbered from T1 in span order. Line breaks inside a surface are
// written as spaces, as BRAT does.
std::string SerializeBrat(const AnnotationSet& set);

struct BratDocument {
  Document doc;
  AnnotationSet annotations;
};

// Every <name>.txt with a sibling <name>.ann under `dir` (non-recursive),
// sorted by name. The document id is <name>.
std::vector<BratDocument> ReadBratDirectory(const std::string& dir,
                                            const std::string& annotator_id = "");

}  // namespace sdtk::corpus

#endif  // SDTK_CORPUS_BRAT_H_
