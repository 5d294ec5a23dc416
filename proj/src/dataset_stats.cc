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

#include "wfeval/dataset_stats.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wfeval/error.h"

namespace wfeval {

double perplexity(const ClassCounts& counts) {
  const double total = static_cast<double>(counts.total());
  double entropy = 0.0;  // nats
  for (const auto& [label, n] : counts) {
    const double p = static_cast<double>(n) / total;
    entropy -= p * std::log(p);
  }
  // Entropy is bounded by log(k); clamp rounding at both ends.
  return std::clamp(std::exp(entropy), 1.0, static_cast<double>(counts.size()));
}

double imbalance_ratio(const ClassCounts& counts,
                       const std::optional<ClassLabel>& na_label) {
  std::uint64_t hi = 0;
  std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [label, n] : counts) {
    if (na_label && label == *na_label) continue;
    hi = std::max(hi, n);
    lo = std::min(lo, n);
  }
  if (hi == 0) {
    throw Error(ErrorKind::kInvalidInput,
                "imbalance ratio needs at least one positive class");
  }
  return static_cast<double>(hi) / static_cast<double>(lo);
}

DatasetStats dataset_stats(const std::vector<ClassLabel>& labels,
                           const std::optional<ClassLabel>& na_label) {
  if (labels.empty()) {
    throw Error(ErrorKind::kInvalidInput, "dataset statistics need labels");
  }
  const ClassCounts all = ClassCounts::from_labels(labels);

  DatasetStats s;
  s.n_classes = all.size();
  s.n_samples = labels.size();
  const std::uint64_t na_count =
      na_label && all.contains(*na_label) ? all.at(*na_label) : 0;
  s.pct_na = 100.0 * static_cast<double>(na_count) /
             static_cast<double>(labels.size());
  s.perplexity_with_na = perplexity(all);

  if (na_count < labels.size()) {
    const ClassCounts positive = ClassCounts::from_labels(labels, na_label);
    s.perplexity_without_na = perplexity(positive);
    s.ratio = imbalance_ratio(positive);
  }
  return s;
}

}  // namespace wfeval
