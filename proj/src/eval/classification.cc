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

#include "eval/classification.h"

#include <algorithm>
#include <string>

#include "core/errors.h"

namespace sdtk::eval {

double ImportanceAccuracy(std::span<const ImportanceLevel> preds,
                          std::span<const std::array<ImportanceLevel, 3>> gold) {
  if (preds.size() != gold.size()) {
    throw InputError("importance accuracy: " + std::to_string(preds.size()) +
                     " predictions for " + std::to_string(gold.size()) +
                     " gold triples");
  }
  if (preds.empty()) throw InputError("importance accuracy: no instances");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (std::find(gold[i].begin(), gold[i].end(), preds[i]) != gold[i].end()) {
      ++correct;
    }
  }
  return double(correct) / double(preds.size());
}

}  // namespace sdtk::eval
