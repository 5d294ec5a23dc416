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

// Confusion counts and per-class F-beta scores for single-label multi-class
// predictions, plus the pooled (micro) score with the optional exclusion of
// a negative class.

#ifndef WFEVAL_METRICS_H_
#define WFEVAL_METRICS_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace wfeval {

// A class name. Never empty; compared by exact byte equality.
class ClassLabel {
 public:
  explicit ClassLabel(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend std::strong_ordering operator<=>(const ClassLabel&,
                                          const ClassLabel&) = default;

 private:
  std::string name_;
};

struct LabeledPair {
  ClassLabel gold;
  ClassLabel predicted;
};

// One model run over an evaluation set. Immutable after construction.
class EvaluationRun {
 public:
  // Throws Error(kInvalidInput) when `pairs` is empty.
  EvaluationRun(std::vector<LabeledPair> pairs,
                std::optional<ClassLabel> na_label = std::nullopt,
                std::string model_id = {}, std::string run_id = {});

  const std::vector<LabeledPair>& pairs() const noexcept { return pairs_; }
  const std::optional<ClassLabel>& na_label() const noexcept {
    return na_label_;
  }
  const std::string& model_id() const noexcept { return model_id_; }
  const std::string& run_id() const noexcept { return run_id_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  // Every label seen in gold or predicted position.
  std::set<ClassLabel> labels() const;

  // Fraction of pairs with gold == predicted.
  double accuracy() const;

 private:
  std::vector<LabeledPair> pairs_;
  std::optional<ClassLabel> na_label_;
  std::string model_id_;
  std::string run_id_;
};

struct ClassConfusion {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  std::uint64_t support() const noexcept { return tp + fn; }
  std::uint64_t predicted() const noexcept { return tp + fp; }

  friend bool operator==(const ClassConfusion&,
                         const ClassConfusion&) = default;
};

// Per-class one-vs-rest counts for every label that appears in gold or
// predicted position.
class ConfusionCounts {
 public:
  using Map = std::map<ClassLabel, ClassConfusion>;

  explicit ConfusionCounts(const EvaluationRun& run);

  const Map& by_class() const noexcept { return counts_; }
  const ClassConfusion& at(const ClassLabel& label) const;
  bool contains(const ClassLabel& label) const {
    return counts_.contains(label);
  }
  std::uint64_t total() const noexcept { return total_; }

  auto begin() const { return counts_.begin(); }
  auto end() const { return counts_.end(); }

 private:
  Map counts_;
  std::uint64_t total_ = 0;
};

inline constexpr double kDefaultBeta = 1.0;

struct FScore {
  double value = 0.0;
  // Set when tp = fp = fn = 0 and the score is undefined (reported as 0).
  bool zero_division = false;
};

// (1 + b^2) tp / ((1 + b^2) tp + b^2 fn + fp). Throws Error(kConfiguration)
// for a non-positive or non-finite beta.
FScore f_beta(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn,
              double beta = kDefaultBeta);

struct ClassScore {
  std::uint64_t support = 0;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_beta = 0.0;
  // Precision, recall or F had a zero denominator and was reported as 0.
  bool zero_division = false;
};

using ClassScores = std::map<ClassLabel, ClassScore>;

ClassScores per_class_f(const ConfusionCounts& counts,
                        double beta = kDefaultBeta);

struct MicroScore {
  double precision = 0.0;
  double recall = 0.0;
  double f_beta = 0.0;
  bool zero_division = false;
};

// Pooled score. With include_na = false the negative class is removed from
// both the predicted-positive and the gold-positive pools, which requires
// run.na_label(); otherwise Error(kConfiguration). With include_na = true
// every pair counts and for beta = 1 the result equals accuracy.
MicroScore micro_score(const EvaluationRun& run, double beta = kDefaultBeta,
                       bool include_na = false);

inline double micro_f(const EvaluationRun& run, double beta = kDefaultBeta,
                      bool include_na = false) {
  return micro_score(run, beta, include_na).f_beta;
}

// Throws Error(kInvalidInput) naming the first label of `run` not in
// `allowed`.
void check_known_labels(const EvaluationRun& run,
                        const std::set<ClassLabel>& allowed);

}  // namespace wfeval

#endif  // WFEVAL_METRICS_H_
