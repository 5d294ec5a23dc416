// Copyright 2026 The wfeval Authors.
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

// Label-distribution diagnostics for imbalanced datasets.

#ifndef WFEVAL_DATASET_STATS_H_
#define WFEVAL_DATASET_STATS_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "wfeval/metrics.h"
#include "wfeval/weighting.h"

namespace wfeval {

struct DatasetStats {
  // Positive classes, plus one if the negative class occurs.
  std::size_t n_classes = 0;
  std::size_t n_samples = 0;
  double pct_na = 0.0;
  double perplexity_with_na = 1.0;
  // Undefined when every label is the negative class.
  std::optional<double> perplexity_without_na;
  // Most over least frequent positive class; undefined without positives.
  std::optional<double> ratio;
};

// Exponentiated Shannon entropy of the class proportions. Equals the class
// count for a uniform distribution.
double perplexity(const ClassCounts& counts);

// max / min over the classes other than `na_label`. Throws
// Error(kInvalidInput) if no such class exists.
double imbalance_ratio(const ClassCounts& counts,
                       const std::optional<ClassLabel>& na_label = std::nullopt);

// Throws Error(kInvalidInput) for an empty label sequence.
DatasetStats dataset_stats(const std::vector<ClassLabel>& labels,
                           const std::optional<ClassLabel>& na_label = std::nullopt);

}  // namespace wfeval

#endif  // WFEVAL_DATASET_STATS_H_
