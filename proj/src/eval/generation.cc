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

#include "eval/generation.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "core/errors.h"
#include "core/tokenize.h"
#include "core/unicode.h"

namespace sdtk::eval {
namespace {

bool IsAsciiPunct(char32_t cp) {
  return cp < 0x80 && std::ispunct(static_cast<int>(cp));
}

using NgramCounts = std::map<std::vector<std::string>, int>;

NgramCounts Ngrams(const std::vector<std::string>& tokens, std::size_t n) {
  NgramCounts counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return counts;
}

// Clipped overlap and candidate total.
std::pair<int, int> NgramMatch(const std::vector<std::string>& cand,
                               const std::vector<std::string>& ref,
                               std::size_t n) {
  const NgramCounts c = Ngrams(cand, n);
  const NgramCounts r = Ngrams(ref, n);
  int matched = 0, total = 0;
  for (const auto& [gram, count] : c) {
    total += count;
    auto it = r.find(gram);
    if (it != r.end()) matched += std::min(count, it->second);
  }
  return {matched, total};
}

double FMeasure(double overlap, double cand_total, double ref_total) {
  if (cand_total == 0 || ref_total == 0 || overlap == 0) return 0.0;
  const double p = overlap / cand_total;
  const double r = overlap / ref_total;
  return 100.0 * 2 * p * r / (p + r);
}

}  // namespace

std::vector<std::string> BleuTokens(std::string_view text) {
  const std::u32string cps = unicode::Decode(text);
  std::u32string spaced;
  for (char32_t cp : cps) {
    if (IsAsciiPunct(cp)) {
      spaced += U' ';
      spaced += cp;
      spaced += U' ';
    } else {
      spaced += cp;
    }
  }
  return SplitWhitespace(unicode::Encode(spaced));
}

double Bleu(std::string_view candidate, std::string_view reference) {
  const auto cand = BleuTokens(candidate);
  const auto ref = BleuTokens(reference);
  if (cand.empty()) return 0.0;
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto [m, t] = NgramMatch(cand, ref, n);
    double p;
    if (n == 1) {
      if (m == 0) return 0.0;
      p = double(m) / t;
    } else {
      p = (m + 1.0) / (t + 1.0);
    }
    log_sum += std::log(p);
  }
  const double c = double(cand.size());
  const double r = double(ref.size());
  const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return 100.0 * bp * std::exp(log_sum / 4.0);
}

std::vector<std::string> RougeTokens(std::string_view text) {
  const std::u32string cps = unicode::Decode(text);
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t cp : cps) {
    const bool word = cp < 0x80 ? std::isalnum(static_cast<int>(cp)) != 0
                                : unicode::IsWordChar(cp);
    if (word) {
      unicode::AppendUtf8(unicode::ToLowerAscii(cp), &current);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

double Rouge2(std::string_view candidate, std::string_view reference) {
  const auto cand = RougeTokens(candidate);
  const auto ref = RougeTokens(reference);
  if (cand.size() < 2 || ref.size() < 2) return 0.0;
  auto [m, t] = NgramMatch(cand, ref, 2);
  return FMeasure(m, t, double(ref.size() - 1));
}

double RougeL(std::string_view candidate, std::string_view reference) {
  const auto a = RougeTokens(candidate);
  const auto b = RougeTokens(reference);
  if (a.empty() || b.empty()) return 0.0;
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return FMeasure(double(prev[b.size()]), double(a.size()), double(b.size()));
}

GenMetric ParseGenMetric(std::string_view name) {
  const std::string n = unicode::ToLower(name);
  if (n == "bleu") return GenMetric::kBleu;
  if (n == "rouge2" || n == "rouge-2") return GenMetric::kRouge2;
  if (n == "rougel" || n == "rouge-l") return GenMetric::kRougeL;
  throw InputError("unknown generation metric '" + std::string(name) + "'");
}

double Score(GenMetric metric, std::string_view candidate,
             std::string_view reference) {
  switch (metric) {
    case GenMetric::kBleu:
      return Bleu(candidate, reference);
    case GenMetric::kRouge2:
      return Rouge2(candidate, reference);
    case GenMetric::kRougeL:
      return RougeL(candidate, reference);
  }
  return 0.0;
}

std::vector<int> MaxAssignment(std::span<const double> scores, int rows,
                               int cols) {
  std::vector<int> result(rows, -1);
  if (rows == 0 || cols == 0) return result;
  const bool transpose = rows > cols;
  const int n = transpose ? cols : rows;  // n <= m
  const int m = transpose ? rows : cols;
  auto cost = [&](int i, int j) {
    const double s = transpose ? scores[j * cols + i] : scores[i * cols + j];
    return -s;
  };
  // Shortest augmenting path with potentials; 1-based as usual.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1), v(m + 1);
  std::vector<int> p(m + 1), way(m + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  for (int j = 1; j <= m; ++j) {
    if (p[j] == 0) continue;
    if (transpose) {
      result[j - 1] = p[j] - 1;
    } else {
      result[p[j] - 1] = j - 1;
    }
  }
  return result;
}

double MatchingScore(std::span<const std::string> generations,
                     std::span<const std::string> references, GenMetric metric) {
  if (generations.empty() || references.empty()) {
    throw InputError("matching score needs non-empty generations and references");
  }
  const int rows = static_cast<int>(generations.size());
  const int cols = static_cast<int>(references.size());
  std::vector<double> scores(std::size_t(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      scores[i * cols + j] = Score(metric, generations[i], references[j]);
    }
  }
  const std::vector<int> assign = MaxAssignment(scores, rows, cols);
  // Summed in sorted order.
  std::vector<double> matched;
  for (int i = 0; i < rows; ++i) {
    if (assign[i] >= 0) matched.push_back(scores[i * cols + assign[i]]);
  }
  std::sort(matched.begin(), matched.end());
  double total = 0.0;
  for (double s : matched) total += s;
  return total / double(std::min(rows, cols));
}

std::size_t DiversityBigrams(
    std::span<const std::vector<std::string>> generation_sets) {
  std::set<std::pair<std::string, std::string>> bigrams;
  for (const auto& set : generation_sets) {
    for (const std::string& candidate : set) {
      const auto words = SplitWhitespace(unicode::ToLower(candidate));
      for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        bigrams.emplace(words[i], words[i + 1]);
      }
    }
  }
  return bigrams.size();
}

}  // namespace sdtk::eval
