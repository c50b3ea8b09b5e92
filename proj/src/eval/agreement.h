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

#ifndef SDTK_EVAL_AGREEMENT_H_
#define SDTK_EVAL_AGREEMENT_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace sdtk::eval {

// |a ∩ b| / |a ∪ b| over word indices; 1.0 when both are empty.
double TwoAgree(const std::set<std::size_t>& a, const std::set<std::size_t>& b);

// One post: ratings[annotator][word], nullopt where an annotator gave no
// value. Values are nominal category codes.
using RatingMatrix = std::vector<std::vector<std::optional<int>>>;

// Nominal Krippendorff's alpha for one post. nullopt when alpha is undefined,
// i.e. there is no pairable value or the expected disagreement is zero.
std::optional<double> KrippendorffAlphaNominal(const RatingMatrix& post);

struct AlphaSummary {
  std::optional<double> mean;  // unweighted over posts with a defined alpha
  std::size_t posts_used = 0;
  std::size_t posts_skipped = 0;  // alpha undefined
};

// Per-post alpha averaged over posts. Posts with fewer than two annotators
// are ignored; throws InputError when no post has two.
AlphaSummary MeanKrippendorffAlpha(std::span<const RatingMatrix> posts);

}  // namespace sdtk::eval

#endif  // SDTK_EVAL_AGREEMENT_H_
