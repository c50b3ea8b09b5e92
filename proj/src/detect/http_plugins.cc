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

#include <mutex>

#include "core/errors.h"
#include "core/records.h"
#include "detect/builtin_plugins.h"
#include "httplib.h"

namespace sdtk::detect {
namespace {

// One client per plugin; httplib clients are not safe for concurrent use, so
// calls are serialized here as well as advertised via concurrent_safe().
class JsonEndpoint {
 public:
  JsonEndpoint(const std::string& base_url, double timeout_s)
      : client_(base_url) {
    if (!client_.is_valid()) throw ConfigError("bad plugin url: " + base_url);
    const auto sec = static_cast<time_t>(timeout_s);
    const auto usec = static_cast<time_t>((timeout_s - sec) * 1e6);
    client_.set_connection_timeout(sec, usec);
    client_.set_read_timeout(sec, usec);
    client_.set_write_timeout(sec, usec);
  }

  Json Post(const std::string& path, const Json& body) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto res = client_.Post(path, body.dump(), "application/json");
    if (!res) {
      throw PluginError("plugin request " + path + " failed: " +
                        httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw PluginError("plugin request " + path + " returned HTTP " +
                        std::to_string(res->status));
    }
    try {
      return Json::parse(res->body);
    } catch (const Json::exception& e) {
      throw PluginError("plugin " + path + " sent invalid JSON: " + e.what());
    }
  }

  std::string Version() const {
    std::lock_guard<std::mutex> lock(mu_);
    auto res = client_.Get("/version");
    if (res && res->status == 200) return "http:" + res->body;
    return "http";
  }

 private:
  mutable std::mutex mu_;
  mutable httplib::Client client_;
};

std::vector<SpanRange> ReadRanges(const Json& arr, const char* what) {
  if (!arr.is_array()) throw PluginError(std::string(what) + " must be an array");
  std::vector<SpanRange> out;
  for (const Json& r : arr) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_unsigned() ||
        !r[1].is_number_unsigned()) {
      throw PluginError(std::string(what) + " entries must be [start, end]");
    }
    out.push_back({r[0].get<std::size_t>(), r[1].get<std::size_t>()});
  }
  return out;
}

class HttpTagger : public Tagger {
 public:
  HttpTagger(const std::string& url, double timeout_s) : ep_(url, timeout_s) {}

  TaggerOutput Tag(const Chunk& chunk) const override {
    const Json reply = ep_.Post("/tag", Json{{"text", chunk.text}});
    TaggerOutput out;
    out.tokens = ReadRanges(reply.value("tokens", Json()), "tokens");
    const Json labels = reply.value("labels", Json());
    if (!labels.is_array()) throw PluginError("labels must be an array");
    for (const Json& l : labels) {
      if (!l.is_string()) throw PluginError("labels must be strings");
      out.labels.push_back(ParseBioLabel(l.get<std::string>()));
    }
    return out;
  }
  std::string version() const override { return ep_.Version(); }
  bool concurrent_safe() const override { return false; }

 private:
  JsonEndpoint ep_;
};

class HttpGate : public SentenceGate {
 public:
  HttpGate(const std::string& url, double timeout_s) : ep_(url, timeout_s) {}

  bool ContainsDisclosure(std::string_view sentence) const override {
    const Json reply = ep_.Post("/gate", Json{{"sentence", sentence}});
    auto it = reply.find("disclosure");
    if (it == reply.end() || !it->is_boolean()) {
      throw PluginError("gate reply lacks boolean 'disclosure'");
    }
    return it->get<bool>();
  }
  std::string version() const override { return ep_.Version(); }
  bool concurrent_safe() const override { return false; }

 private:
  JsonEndpoint ep_;
};

class HttpRecognizer : public PersonRecognizer {
 public:
  HttpRecognizer(const std::string& url, double timeout_s)
      : ep_(url, timeout_s) {}

  std::vector<SpanRange> FindPersons(std::string_view text) const override {
    const Json reply = ep_.Post("/persons", Json{{"text", text}});
    return ReadRanges(reply.value("spans", Json()), "spans");
  }
  std::string version() const override { return ep_.Version(); }
  bool concurrent_safe() const override { return false; }

 private:
  JsonEndpoint ep_;
};

}  // namespace

std::unique_ptr<Tagger> MakeHttpTagger(const std::string& base_url,
                                       double timeout_s) {
  return std::make_unique<HttpTagger>(base_url, timeout_s);
}

std::unique_ptr<SentenceGate> MakeHttpGate(const std::string& base_url,
                                           double timeout_s) {
  return std::make_unique<HttpGate>(base_url, timeout_s);
}

std::unique_ptr<PersonRecognizer> MakeHttpRecognizer(const std::string& base_url,
                                                     double timeout_s) {
  return std::make_unique<HttpRecognizer>(base_url, timeout_s);
}

}  // namespace sdtk::detect
