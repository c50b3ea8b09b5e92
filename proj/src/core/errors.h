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

#ifndef SDTK_CORE_ERRORS_H_
#define SDTK_CORE_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdtk {

// Coarse error classes. The numeric values double as CLI exit codes and as
// the status codes of the C API.
enum class ErrorKind : int {
  kInternal = 1,
  kInput = 2,
  kPlugin = 3,
  kProvider = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Offsets outside the text they index, or a stale span snapshot.
class RangeError : public Error {
 public:
  explicit RangeError(const std::string& message)
      : Error(ErrorKind::kInput, message) {}
};

// Malformed input. `line` is 1-based when the input is line oriented.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message,
                      std::optional<std::size_t> line = std::nullopt)
      : Error(ErrorKind::kInput, line ? "line " + std::to_string(*line) +
                                            ": " + message
                                      : message),
        line_(line) {}

  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& message)
      : Error(ErrorKind::kInput, message) {}
};

// A named plugin is unknown or could not be constructed.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error(ErrorKind::kPlugin, message) {}
};

// A plugin misbehaved while running (bad output, exception).
class PluginError : public Error {
 public:
  PluginError(const std::string& message, std::string chunk_id = {})
      : Error(ErrorKind::kPlugin,
              chunk_id.empty() ? message
                               : "chunk " + chunk_id + ": " + message),
        chunk_id_(std::move(chunk_id)) {}

  const std::string& chunk_id() const { return chunk_id_; }

 private:
  std::string chunk_id_;
};

enum class ProviderFailure {
  kAuth,
  kRateLimit,
  kTimeout,
  kServer,
  kBadResponse,
  kExhausted,
};

const char* ProviderFailureName(ProviderFailure failure);

class ProviderError : public Error {
 public:
  ProviderError(ProviderFailure failure, const std::string& message)
      : Error(ErrorKind::kProvider,
              std::string(ProviderFailureName(failure)) + ": " + message),
        failure_(failure) {}

  ProviderFailure failure() const { return failure_; }
  bool retryable() const {
    return failure_ == ProviderFailure::kRateLimit ||
           failure_ == ProviderFailure::kTimeout ||
           failure_ == ProviderFailure::kServer;
  }

 private:
  ProviderFailure failure_;
};

// Generation produced fewer valid outputs than requested. The valid ones are
// carried along so callers can still surface them.
class PartialResultError : public Error {
 public:
  PartialResultError(const std::string& message, std::vector<std::string> valid)
      : Error(ErrorKind::kProvider, message), valid_(std::move(valid)) {}

  const std::vector<std::string>& valid() const { return valid_; }

 private:
  std::vector<std::string> valid_;
};

}  // namespace sdtk

#endif  // SDTK_CORE_ERRORS_H_
