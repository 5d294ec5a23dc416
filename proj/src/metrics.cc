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

#include "wfeval/metrics.h"

#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "wfeval/error.h"

namespace wfeval {
namespace {

double ratio_or_zero(std::uint64_t num, std::uint64_t den, bool& undefined) {
  if (den == 0) {
    undefined = true;
    return 0.0;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ClassLabel::ClassLabel(std::string name) : name_(std::move(name)) {
  if (name_.empty()) {
    throw Error(ErrorKind::kInvalidInput, "class label must not be empty");
  }
}

EvaluationRun::EvaluationRun(std::vector<LabeledPair> pairs,
                             std::optional<ClassLabel> na_label,
                             std::string model_id, std::string run_id)
    : pairs_(std::move(pairs)),
      na_label_(std::move(na_label)),
      model_id_(std::move(model_id)),
      run_id_(std::move(run_id)) {
  if (pairs_.empty()) {
    throw Error(ErrorKind::kInvalidInput,
                "an evaluation run needs at least one labeled pair");
  }
}

std::set<ClassLabel> EvaluationRun::labels() const {
  std::set<ClassLabel> out;
  for (const auto& p : pairs_) {
    out.insert(p.gold);
    out.insert(p.predicted);
  }
  return out;
}

double EvaluationRun::accuracy() const {
  std::uint64_t correct = 0;
  for (const auto& p : pairs_) {
    if (p.gold == p.predicted) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(pairs_.size());
}

ConfusionCounts::ConfusionCounts(const EvaluationRun& run)
    : total_(run.size()) {
  for (const auto& p : run.pairs()) {
    if (p.gold == p.predicted) {
      ++counts_[p.gold].tp;
    } else {
      ++counts_[p.gold].fn;
      ++counts_[p.predicted].fp;
    }
  }
}

const ClassConfusion& ConfusionCounts::at(const ClassLabel& label) const {
  auto it = counts_.find(label);
  if (it == counts_.end()) {
    throw Error(ErrorKind::kInconsistentInput,
                fmt::format("no confusion entry for class '{}'", label.name()));
  }
  return it->second;
}

FScore f_beta(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn,
              double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorKind::kConfiguration,
                fmt::format("beta must be a positive finite number, got {}",
                            beta));
  }
  const double b2 = beta * beta;
  const double weighted_tp = (1.0 + b2) * static_cast<double>(tp);
  const double denominator = weighted_tp + b2 * static_cast<double>(fn) +
                             static_cast<double>(fp);
  if (denominator == 0.0) return {0.0, true};
  return {weighted_tp / denominator, false};
}

ClassScores per_class_f(const ConfusionCounts& counts, double beta) {
  ClassScores out;
  for (const auto& [label, c] : counts) {
    ClassScore s;
    s.support = c.support();
    s.tp = c.tp;
    s.fp = c.fp;
    s.fn = c.fn;
    bool undefined = false;
    s.precision = ratio_or_zero(c.tp, c.predicted(), undefined);
    s.recall = ratio_or_zero(c.tp, c.support(), undefined);
    const FScore f = f_beta(c.tp, c.fp, c.fn, beta);
    s.f_beta = f.value;
    s.zero_division = undefined || f.zero_division;
    out.emplace(label, s);
  }
  return out;
}

MicroScore micro_score(const EvaluationRun& run, double beta,
                       bool include_na) {
  const ClassLabel* na = nullptr;
  if (!include_na) {
    if (!run.na_label()) {
      throw Error(ErrorKind::kConfiguration,
                  "micro score excluding the negative class needs an NA label");
    }
    na = &*run.na_label();
  }

  std::uint64_t tp = 0;
  std::uint64_t predicted_positive = 0;
  std::uint64_t gold_positive = 0;
  for (const auto& p : run.pairs()) {
    const bool pred_counts = na == nullptr || p.predicted != *na;
    const bool gold_counts = na == nullptr || p.gold != *na;
    if (pred_counts) {
      ++predicted_positive;
      if (p.predicted == p.gold) ++tp;
    }
    if (gold_counts) ++gold_positive;
  }

  MicroScore out;
  bool undefined = false;
  out.precision = ratio_or_zero(tp, predicted_positive, undefined);
  out.recall = ratio_or_zero(tp, gold_positive, undefined);
  const FScore f = f_beta(tp, predicted_positive - tp, gold_positive - tp, beta);
  out.f_beta = f.value;
  out.zero_division = undefined || f.zero_division;
  return out;
}

void check_known_labels(const EvaluationRun& run,
                        const std::set<ClassLabel>& allowed) {
  for (std::size_t i = 0; i < run.size(); ++i) {
    const auto& p = run.pairs()[i];
    for (const ClassLabel* l : {&p.gold, &p.predicted}) {
      if (!allowed.contains(*l)) {
        throw Error(ErrorKind::kInvalidInput,
                    fmt::format("unknown label '{}' in sample {} of run '{}'",
                                l->name(), i + 1, run.run_id()));
      }
    }
  }
}

}  // namespace wfeval
