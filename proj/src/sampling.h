// Copyright 2026 The cesna Authors.
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

#ifndef CESNA_SRC_SAMPLING_H_
#define CESNA_SRC_SAMPLING_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

namespace cesna::internal {

// round(x) with halves to even, so 4.5 -> 4 and 1.5 -> 2.
inline std::int64_t RoundHalfEven(double x) {
  return static_cast<std::int64_t>(std::nearbyint(x));
}

// Floyd's algorithm: `count` distinct values from [0, population), sorted.
inline std::vector<std::int64_t> SampleIndices(std::int64_t population,
                                               std::int64_t count,
                                               std::mt19937_64& rng) {
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(count) * 2);
  for (std::int64_t j = population - count; j < population; ++j) {
    std::uniform_int_distribution<std::int64_t> pick(0, j);
    const std::int64_t t = pick(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::int64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cesna::internal

#endif  // CESNA_SRC_SAMPLING_H_
