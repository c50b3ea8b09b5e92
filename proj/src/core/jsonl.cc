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

#include "core/jsonl.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "core/errors.h"

namespace sdtk {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFileAtomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const std::string tmp =
      path + ".tmp." + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw InputError("write failed for " + tmp);
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw InputError("cannot rename " + tmp + " to " + path + ": " + ec.message());
  }
}

std::vector<Json> ParseJsonl(std::string_view content) {
  std::vector<Json> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
  }
  return out;
}

std::vector<Json> ReadJsonl(const std::string& path) {
  try {
    return ParseJsonl(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string ToJsonl(const std::vector<Json>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.dump(-1, ' ', false, Json::error_handler_t::strict);
    out += '\n';
  }
  return out;
}

void WriteJsonlAtomic(const std::string& path, const std::vector<Json>& records) {
  WriteFileAtomic(path, ToJsonl(records));
}

template <typename T>
std::vector<T> MapRecords(const std::vector<Json>& records,
                          const std::function<T(const Json&)>& fn) {
  std::vector<T> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      out.push_back(fn(records[i]));
    } catch (const Error& e) {
      throw ParseError("record " + std::to_string(i + 1) + ": " + e.what());
    } catch (const Json::exception& e) {
      throw ParseError("record " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

template std::vector<Document> MapRecords(
    const std::vector<Json>&, const std::function<Document(const Json&)>&);
template std::vector<DisclosureSpan> MapRecords(
    const std::vector<Json>&, const std::function<DisclosureSpan(const Json&)>&);

std::vector<Document> ReadDocuments(const std::string& path) {
  const auto records = ReadJsonl(path);
  try {
    return MapRecords<Document>(records, DocumentFromJson);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<DisclosureSpan> ReadSpans(const std::string& path) {
  const auto records = ReadJsonl(path);
  try {
    return MapRecords<DisclosureSpan>(records, SpanFromJson);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace sdtk
