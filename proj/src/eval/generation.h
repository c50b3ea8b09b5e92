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

#ifndef SDTK_EVAL_GENERATION_H_
#define SDTK_EVAL_GENERATION_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

// Metrics for sets of generated abstractions. Scores are on a 0-100 scale.
namespace sdtk::eval {

// Tokenization used by BLEU: whitespace split after isolating punctuation,
// case preserved.
std::vector<std::string> BleuTokens(std::string_view text);

// Sentence BLEU-4 with brevity penalty. Unigram precision is unsmoothed;
// orders 2-4 use add-one smoothing, (matches + 1) / (total + 1).
double Bleu(std::string_view candidate, std::string_view reference);

// Lowercased runs of ASCII letters and digits (other code points are kept as
// word characters).
std::vector<std::string> RougeTokens(std::string_view text);

// F-measures. 0 when either side has no bigram (ROUGE-2) or no token.
double Rouge2(std::string_view candidate, std::string_view reference);
double RougeL(std::string_view candidate, std::string_view reference);

enum class GenMetric { kBleu, kRouge2, kRougeL };

GenMetric ParseGenMetric(std::string_view name);
double Score(GenMetric metric, std::string_view candidate,
             std::string_view reference);

// Maximum-weight one-to-one assignment for a rows x cols score matrix
// (row-major). Returns, for each row, the assigned column or -1.
std::vector<int> MaxAssignment(std::span<const double> scores, int rows,
                               int cols);

// Mean score of the best one-to-one pairing of generations with references,
// averaged over min(|G|, |R|) pairs. Throws InputError if a list is empty.
double MatchingScore(std::span<const std::string> generations,
                     std::span<const std::string> references, GenMetric metric);

// Number of distinct lowercased whitespace-token bigrams over every
// candidate of every set.
std::size_t DiversityBigrams(
    std::span<const std::vector<std::string>> generation_sets);

}  // namespace sdtk::eval

#endif  // SDTK_EVAL_GENERATION_H_
