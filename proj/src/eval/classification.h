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

#ifndef SDTK_EVAL_CLASSIFICATION_H_
#define SDTK_EVAL_CLASSIFICATION_H_

#include <array>
#include <span>

#include "core/types.h"

namespace sdtk::eval {

// Fraction of predictions that equal any of the three gold annotations of
// their instance. Throws InputError on a length mismatch or empty input.
double ImportanceAccuracy(std::span<const ImportanceLevel> preds,
                          std::span<const std::array<ImportanceLevel, 3>> gold);

}  // namespace sdtk::eval

#endif  // SDTK_EVAL_CLASSIFICATION_H_
