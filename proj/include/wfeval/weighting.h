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

// Class weighting schemes for averaging per-class scores, and a checker for
// the degressive-proportionality desiderata:
//
//   D0  sum_i w_i = 1
//   D1  n_i >= n_j  =>  w_i >= w_j
//   D2  n_i >= n_j  =>  w_i / n_i <= w_j / n_j
//
// Unnormalized weights per scheme:
//
//   weighted   n_i
//   dodrans    n_i^(3/4)
//   entropy    -n_i * log2(n_i / N)
//   macro      1
//   power(p)   n_i^p           (p = 1, 3/4, 0 give the three above)
//
// Micro is a pooled computation and has no weight vector; see micro_score().

#ifndef WFEVAL_WEIGHTING_H_
#define WFEVAL_WEIGHTING_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wfeval/metrics.h"

namespace wfeval {

// Positive per-class sample counts. At least one class.
class ClassCounts {
 public:
  using Map = std::map<ClassLabel, std::uint64_t>;

  // Throws Error(kInvalidInput) on an empty map or a zero count.
  explicit ClassCounts(Map counts);

  // Gold support of every class with support > 0, optionally dropping one
  // class (normally the negative class).
  static ClassCounts from_support(
      const ConfusionCounts& confusion,
      const std::optional<ClassLabel>& exclude = std::nullopt);

  // Counts of each distinct label in `labels`, optionally dropping one.
  static ClassCounts from_labels(
      const std::vector<ClassLabel>& labels,
      const std::optional<ClassLabel>& exclude = std::nullopt);

  const Map& by_class() const noexcept { return counts_; }
  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t total() const noexcept { return total_; }
  bool contains(const ClassLabel& label) const {
    return counts_.contains(label);
  }
  std::uint64_t at(const ClassLabel& label) const;

  auto begin() const { return counts_.begin(); }
  auto end() const { return counts_.end(); }

 private:
  Map counts_;
  std::uint64_t total_ = 0;
};

class WeightingScheme {
 public:
  enum class Kind { kMicro, kClassWeighted, kDodrans, kEntropy, kMacro, kPower };

  static WeightingScheme micro() { return WeightingScheme(Kind::kMicro); }
  static WeightingScheme class_weighted() {
    return WeightingScheme(Kind::kClassWeighted);
  }
  static WeightingScheme dodrans() { return WeightingScheme(Kind::kDodrans); }
  static WeightingScheme entropy() { return WeightingScheme(Kind::kEntropy); }
  static WeightingScheme macro() { return WeightingScheme(Kind::kMacro); }
  // Throws Error(kConfiguration) unless 0 <= exponent <= 1.
  static WeightingScheme power(double exponent);

  // Accepts "micro", "weighted", "dodrans", "entropy", "macro" and
  // "power:<p>". Throws Error(kConfiguration) otherwise.
  static WeightingScheme parse(std::string_view name);

  // The five named schemes, from instance-focused to class-focused.
  static std::array<WeightingScheme, 5> standard();

  Kind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return exponent_; }
  std::string name() const;

  friend bool operator==(const WeightingScheme&,
                         const WeightingScheme&) = default;

 private:
  explicit WeightingScheme(Kind kind, double exponent = 0.0)
      : kind_(kind), exponent_(exponent) {}

  Kind kind_;
  double exponent_;
};

// Per-class weights. Entries are finite and non-negative; scheme outputs are
// additionally normalized to sum 1.
class WeightVector {
 public:
  using Map = std::map<ClassLabel, double>;

  // Throws Error(kInvalidInput) on a negative or non-finite weight.
  explicit WeightVector(Map weights);

  const Map& by_class() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double at(const ClassLabel& label) const;
  double sum() const;

  auto begin() const { return weights_.begin(); }
  auto end() const { return weights_.end(); }

 private:
  Map weights_;
};

struct WeightOptions {
  // Samples added to the entropy denominator sum_j n_j without receiving a
  // weight. Used to keep the negative class in the class proportions.
  std::uint64_t entropy_extra_total = 0;
};

// Throws Error(kUnsupportedScheme) for micro and
// Error(kDegenerateDistribution) when every entropy term is zero (a single
// class holding the whole distribution).
WeightVector class_weights(const ClassCounts& counts,
                           const WeightingScheme& scheme,
                           const WeightOptions& options = {});

// sum_i w_i s_i over the weighted classes. Scores for unweighted classes are
// ignored. Throws Error(kInconsistentInput) when a weighted class has no
// score.
double aggregate_score(const std::map<ClassLabel, double>& scores,
                       const WeightVector& weights);
double aggregate_score(const ClassScores& scores, const WeightVector& weights);

struct DesideratumCheck {
  bool passed = true;
  // Class pairs (i, j) with n_i >= n_j that break the rule.
  std::vector<std::pair<ClassLabel, ClassLabel>> witnesses;
};

struct DesiderataReport {
  double weight_sum = 0.0;
  DesideratumCheck d0;
  DesideratumCheck d1;
  DesideratumCheck d2;

  bool all_passed() const { return d0.passed && d1.passed && d2.passed; }
};

struct DesiderataTolerance {
  double sum = 1e-9;
  // Relative slack for the pairwise comparisons, absorbing rounding in
  // ties (e.g. w_i / n_i == w_j / n_j for class-weighted).
  double relative = 1e-12;
};

// Checks D0, D1 and D2 over every ordered class pair. Both inputs must cover
// the same classes, otherwise Error(kInconsistentInput).
DesiderataReport validate_desiderata(const ClassCounts& counts,
                                     const WeightVector& weights,
                                     const DesiderataTolerance& tol = {});

// Classes whose proportion n_i / (N + extra_total) exceeds 1/e. Entropy
// weights decrease in n_i for exactly these classes, so D1 can fail for
// them.
std::vector<ClassLabel> entropy_dominant_classes(
    const ClassCounts& counts, std::uint64_t extra_total = 0);

}  // namespace wfeval

#endif  // WFEVAL_WEIGHTING_H_
