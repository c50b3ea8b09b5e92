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

#ifndef SDTK_CORPUS_SPLIT_H_
#define SDTK_CORPUS_SPLIT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core/records.h"

namespace sdtk::corpus {

// Exactly one of `counts` or `ratios` is set, in (train, dev, test) order.
// Counts are in threads. Ratios are turned into counts by largest remainder
// when they sum to 1 and by flooring otherwise.
struct SplitOptions {
  std::optional<std::array<std::size_t, 3>> counts;
  std::optional<std::array<double, 3>> ratios;
  std::uint64_t seed = 0;
  // Sort threads by their newest record instead of shuffling; test takes the
  // newest threads, dev the next newest, train the next.
  bool time_ordered = false;
  std::string thread_field = "thread_id";  // falls back to "id"
  std::string time_field = "created_utc";
};

struct SplitResult {
  std::array<std::vector<Json>, 3> parts;  // train, dev, test
  std::array<std::size_t, 3> thread_counts{};
  std::size_t unassigned_threads = 0;
  std::size_t unassigned_records = 0;
};

inline constexpr std::array<const char*, 3> kSplitNames = {"train", "dev", "test"};

std::array<std::size_t, 3> CountsFromRatios(const std::array<double, 3>& ratios,
                                            std::size_t total);

// Groups records by thread and assigns whole threads. Record order within
// each part follows the input. Throws InputError when counts exceed the
// number of threads, ratios are negative or sum above 1, or (time-ordered)
// a record lacks a numeric time field.
SplitResult SplitDataset(const std::vector<Json>& records, const SplitOptions& options);

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t UniformBelow(std::uint64_t bound, std::mt19937_64& rng);
void SeededShuffle(std::vector<std::string>* items, std::uint64_t seed);

struct SampleOptions {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  // Records whose values for these fields all match an earlier record are
  // dropped before sampling. Empty disables deduplication.
  std::vector<std::string> dedup_fields = {"title", "body"};
};

// Seeded sample of `n` records (all of them if fewer remain after
// deduplication), returned in input order.
std::vector<Json> SampleRecords(const std::vector<Json>& records, const SampleOptions& options,
                                std::size_t* duplicates_dropped = nullptr);

}  // namespace sdtk::corpus

#endif  // SDTK_CORPUS_SPLIT_H_
