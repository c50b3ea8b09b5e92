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

#include "eval/agreement.h"

#include <algorithm>
#include <map>

#include "core/errors.h"

namespace sdtk::eval {

double TwoAgree(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t both = 0;
  for (std::size_t w : a) both += b.count(w);
  return double(both) / double(a.size() + b.size() - both);
}

std::optional<double> KrippendorffAlphaNominal(const RatingMatrix& post) {
  std::size_t words = 0;
  for (const auto& row : post) words = std::max(words, row.size());

  // Coincidence matrix o[c][k].
  std::map<int, std::map<int, double>> o;
  for (std::size_t u = 0; u < words; ++u) {
    std::vector<int> values;
    for (const auto& row : post) {
      if (u < row.size() && row[u]) values.push_back(*row[u]);
    }
    const std::size_t m = values.size();
    if (m < 2) continue;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) o[values[i]][values[j]] += 1.0 / double(m - 1);
      }
    }
  }

  std::map<int, double> n_c;
  double n = 0.0;
  double observed = 0.0;  // sum of o[c][k] for c != k
  for (const auto& [c, row] : o) {
    for (const auto& [k, v] : row) {
      n_c[c] += v;
      n += v;
      if (c != k) observed += v;
    }
  }
  double expected = 0.0;  // sum of n_c * n_k for c != k
  for (const auto& [c, nc] : n_c) {
    for (const auto& [k, nk] : n_c) {
      if (c != k) expected += nc * nk;
    }
  }
  if (n < 2.0 || expected == 0.0) return std::nullopt;
  return 1.0 - (n - 1.0) * observed / expected;
}

AlphaSummary MeanKrippendorffAlpha(std::span<const RatingMatrix> posts) {
  AlphaSummary summary;
  bool any_pairable = false;
  double sum = 0.0;
  for (const RatingMatrix& post : posts) {
    if (post.size() < 2) continue;
    any_pairable = true;
    if (auto a = KrippendorffAlphaNominal(post)) {
      sum += *a;
      ++summary.posts_used;
    } else {
      ++summary.posts_skipped;
    }
  }
  if (!any_pairable) {
    throw InputError("Krippendorff's alpha needs a post with two annotators");
  }
  if (summary.posts_used > 0) summary.mean = sum / double(summary.posts_used);
  return summary;
}

}  // namespace sdtk::eval
