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

#include "core/errors.h"

namespace sdtk {

const char* ProviderFailureName(ProviderFailure failure) {
  switch (failure) {
    case ProviderFailure::kAuth: return "auth";
    case ProviderFailure::kRateLimit: return "rate_limit";
    case ProviderFailure::kTimeout: return "timeout";
    case ProviderFailure::kServer: return "server";
    case ProviderFailure::kBadResponse: return "bad_response";
    case ProviderFailure::kExhausted: return "exhausted_retries";
  }
  return "unknown";
}

}  // namespace sdtk
