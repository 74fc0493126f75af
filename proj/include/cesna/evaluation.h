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

#ifndef CESNA_EVALUATION_H_
#define CESNA_EVALUATION_H_

#include <span>
#include <string_view>

#include "cesna/affiliation.h"
#include "cesna/graph.h"

namespace cesna {

enum class SimilarityKind { kF1, kJaccard };

// Parses "f1" or "jaccard"; throws InputError otherwise.
SimilarityKind ParseSimilarityKind(std::string_view name);

// F1 = 2|a & b| / (|a| + |b|), Jaccard = |a & b| / |a | b|.
// Throws InputError if either set is empty.
double SetSimilarity(std::span<const NodeId> a, std::span<const NodeId> b,
                     SimilarityKind kind);

// Average of the truth->detected and detected->truth best-match scores over
// distinct communities (identical member sets count once):
//   1/(2|T|) sum_i max_j s(T_i, D_j) + 1/(2|D|) sum_j max_i s(T_i, D_j).
// Throws InputError if either cover is empty.
double MatchScore(const CommunityCover& truth, const CommunityCover& detected,
                  SimilarityKind kind);

// (score - baseline) / baseline. Throws InputError for baseline == 0.
double RelativeGain(double score, double baseline);

}  // namespace cesna

#endif  // CESNA_EVALUATION_H_
