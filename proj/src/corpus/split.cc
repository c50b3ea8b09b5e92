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

#include "corpus/split.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <limits>
#include <set>

#include "core/errors.h"

namespace sdtk::corpus {
namespace {

std::string ThreadKey(const Json& r, const std::string& field) {
  for (const std::string& key : {field, std::string("id")}) {
    auto it = r.find(key);
    if (it == r.end()) continue;
    if (it->is_string()) return it->get<std::string>();
    if (it->is_number_integer()) return std::to_string(it->get<long long>());
  }
  throw InputError("record has no '" + field + "' or 'id' field");
}

double TimeOf(const Json& r, const std::string& field) {
  auto it = r.find(field);
  if (it == r.end() || !it->is_number()) {
    throw InputError("time-ordered split needs numeric '" + field + "' on every record");
  }
  return it->get<double>();
}

}  // namespace

std::array<std::size_t, 3> CountsFromRatios(const std::array<double, 3>& ratios,
                                            std::size_t total) {
  double sum = 0.0;
  for (double r : ratios) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw InputError("split ratios must be non-negative");
    sum += r;
  }
  if (sum > 1.0 + 1e-9) throw InputError("split ratios sum above 1");
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> remainder{};
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double exact = ratios[i] * double(total);
    counts[i] = static_cast<std::size_t>(std::floor(exact + 1e-9));
    remainder[i] = exact - double(counts[i]);
    assigned += counts[i];
  }
  if (std::abs(sum - 1.0) <= 1e-9) {
    std::array<std::size_t, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t k = 0; assigned < total; k = (k + 1) % 3, ++assigned) ++counts[order[k]];
  }
  return counts;
}

std::uint64_t UniformBelow(std::uint64_t bound, std::mt19937_64& rng) {
  if (bound == 0) throw RangeError("UniformBelow bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

void SeededShuffle(std::vector<std::string>* items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items->size(); i > 1; --i) {
    std::swap((*items)[i - 1], (*items)[UniformBelow(i, rng)]);
  }
}

SplitResult SplitDataset(const std::vector<Json>& records, const SplitOptions& options) {
  if (options.counts.has_value() == options.ratios.has_value()) {
    throw InputError("give exactly one of split counts or ratios");
  }
  std::map<std::string, double> newest;
  std::vector<std::string> threads;
  std::vector<std::string> keys;
  keys.reserve(records.size());
  for (const Json& r : records) {
    std::string key = ThreadKey(r, options.thread_field);
    auto [it, inserted] = newest.try_emplace(key, -std::numeric_limits<double>::infinity());
    if (inserted) threads.push_back(key);
    if (options.time_ordered) it->second = std::max(it->second, TimeOf(r, options.time_field));
    keys.push_back(std::move(key));
  }

  const std::size_t total = threads.size();
  const auto counts = options.counts ? *options.counts : CountsFromRatios(*options.ratios, total);
  const std::size_t wanted = counts[0] + counts[1] + counts[2];
  if (wanted > total) {
    throw InputError("split counts (" + std::to_string(wanted) + ") exceed thread count (" +
                     std::to_string(total) + ")");
  }

  // `threads` ends up in assignment order: test first, then dev, then train.
  if (options.time_ordered) {
    std::stable_sort(threads.begin(), threads.end(), [&](const auto& a, const auto& b) {
      const double ta = newest[a], tb = newest[b];
      return ta != tb ? ta > tb : a < b;
    });
  } else {
    std::sort(threads.begin(), threads.end());
    SeededShuffle(&threads, options.seed);
  }
  std::map<std::string, int> part_of;
  std::size_t cursor = 0;
  SplitResult result;
  for (int part : {2, 1, 0}) {
    for (std::size_t i = 0; i < counts[part]; ++i) part_of[threads[cursor++]] = part;
    result.thread_counts[part] = counts[part];
  }
  result.unassigned_threads = total - cursor;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto it = part_of.find(keys[i]);
    if (it == part_of.end()) {
      ++result.unassigned_records;
    } else {
      result.parts[it->second].push_back(records[i]);
    }
  }
  return result;
}

std::vector<Json> SampleRecords(const std::vector<Json>& records, const SampleOptions& options,
                                std::size_t* duplicates_dropped) {
  std::vector<std::size_t> candidates;
  std::set<std::string> seen;
  std::size_t dropped = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!options.dedup_fields.empty()) {
      Json key = Json::array();
      for (const std::string& f : options.dedup_fields) {
        auto it = records[i].find(f);
        key.push_back(it == records[i].end() ? Json() : *it);
      }
      if (!seen.insert(key.dump()).second) {
        ++dropped;
        continue;
      }
    }
    candidates.push_back(i);
  }
  if (duplicates_dropped) *duplicates_dropped = dropped;

  std::mt19937_64 rng(options.seed);
  const std::size_t take = std::min(options.n, candidates.size());
  // Partial Fisher-Yates over the candidate indices.
  for (std::size_t i = 0; i < take; ++i) {
    std::swap(candidates[i], candidates[i + UniformBelow(candidates.size() - i, rng)]);
  }
  candidates.resize(take);
  std::sort(candidates.begin(), candidates.end());
  std::vector<Json> out;
  out.reserve(take);
  for (std::size_t i : candidates) out.push_back(records[i]);
  return out;
}

}  // namespace sdtk::corpus
