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

#include "corpus/brat.h"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "core/errors.h"
#include "core/jsonl.h"
#include "core/unicode.h"

namespace sdtk::corpus {
namespace {

std::string NewlinesToSpaces(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

std::size_t ParseOffset(const std::string& s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
    throw ParseError("bad offset '" + s + "'", line);
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError("bad offset '" + s + "'", line);
  }
}

}  // namespace

AnnotationSet ParseBrat(std::string_view ann_text, std::string_view doc_text,
                        const std::string& doc_id,
                        const std::string& annotator_id, Layer layer) {
  AnnotationSet set;
  set.doc_id = doc_id;
  set.annotator_id = annotator_id;
  set.layer = layer;
  const std::size_t len = unicode::CodepointCount(doc_text);

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= ann_text.size()) {
    std::size_t nl = ann_text.find('\n', pos);
    if (nl == std::string_view::npos) nl = ann_text.size();
    std::string line(ann_text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] != 'T') {
      if (std::string_view("#ARENM*").find(line[0]) != std::string_view::npos) continue;
      throw ParseError("unrecognized annotation line", line_no);
    }

    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw ParseError("expected 'T<k>\\t<Category> <start> <end>\\t<text>'", line_no);
    }
    const std::string middle = line.substr(tab1 + 1, tab2 - tab1 - 1);
    const std::string surface = line.substr(tab2 + 1);
    if (middle.find(';') != std::string::npos) {
      throw ParseError("discontinuous spans are not supported", line_no);
    }
    std::istringstream fields(middle);
    std::string type, start_s, end_s, extra;
    if (!(fields >> type >> start_s >> end_s) || (fields >> extra)) {
      throw ParseError("expected '<Category> <start> <end>'", line_no);
    }
    auto category = ParseCategory(type);
    if (!category) throw ParseError("unknown category '" + type + "'", line_no);
    const std::size_t start = ParseOffset(start_s, line_no);
    const std::size_t end = ParseOffset(end_s, line_no);
    if (!(start < end && end <= len)) {
      throw ParseError("offsets " + start_s + " " + end_s +
                           " out of range for text of length " + std::to_string(len),
                       line_no);
    }
    DisclosureSpan span = MakeSpan(doc_id, doc_text, start, end, *category);
    if (NewlinesToSpaces(span.text) != NewlinesToSpaces(surface)) {
      throw ParseError("surface '" + surface + "' does not match text '" +
                           span.text + "'",
                       line_no);
    }
    set.spans.push_back(std::move(span));
  }
  SortSpans(&set.spans);
  return set;
}

std::string SerializeBrat(const AnnotationSet& set) {
  std::vector<DisclosureSpan> spans = set.spans;
  SortSpans(&spans);
  std::string out;
  int k = 0;
  for (const DisclosureSpan& s : spans) {
    out += "T" + std::to_string(++k) + "\t" + std::string(CategoryName(s.category)) +
           " " + std::to_string(s.start) + " " + std::to_string(s.end) + "\t" +
           NewlinesToSpaces(s.text) + "\n";
  }
  return out;
}

std::vector<BratDocument> ReadBratDirectory(const std::string& dir,
                                            const std::string& annotator_id) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<fs::path> texts;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      fs::path ann = entry.path();
      ann.replace_extension(".ann");
      if (fs::exists(ann)) texts.push_back(entry.path());
    }
  }
  std::sort(texts.begin(), texts.end());
  std::vector<BratDocument> out;
  for (const fs::path& txt : texts) {
    fs::path ann = txt;
    ann.replace_extension(".ann");
    BratDocument bd;
    bd.doc.id = txt.stem().string();
    bd.doc.kind = DocumentKind::kBody;
    bd.doc.text = ReadFile(txt.string());
    bd.doc.thread_id = bd.doc.id;
    try {
      bd.annotations =
          ParseBrat(ReadFile(ann.string()), bd.doc.text, bd.doc.id, annotator_id);
    } catch (const ParseError& e) {
      throw ParseError(ann.string() + ": " + e.what());
    }
    out.push_back(std::move(bd));
  }
  return out;
}

}  // namespace sdtk::corpus
