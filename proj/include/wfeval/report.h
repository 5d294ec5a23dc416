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

// Assembles classification reports, run comparisons and weight tables from
// loaded runs. Rendering lives in render.h.

#ifndef WFEVAL_REPORT_H_
#define WFEVAL_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wfeval/metrics.h"
#include "wfeval/stattest.h"
#include "wfeval/weighting.h"

namespace wfeval {

struct ReportConfig {
  double beta = kDefaultBeta;
  std::optional<ClassLabel> na_label;
  // Score the negative class like any other class. Forced on when there is
  // no NA label.
  bool include_na = false;
  // Keep the negative class in the entropy denominator sum_j n_j.
  bool entropy_include_na = false;
  std::vector<WeightingScheme> schemes;  // empty means all five
  // Weight counts from another split; gold support of the run otherwise.
  std::optional<ClassCounts> external_counts;
  std::string weight_source = "gold";

  bool effective_include_na() const { return include_na || !na_label; }
  std::vector<WeightingScheme> effective_schemes() const;
};

// Orders schemes as micro, weighted, dodrans, entropy, macro, then power
// schemes in the given order, dropping duplicates.
std::vector<WeightingScheme> canonical_scheme_order(
    std::span<const WeightingScheme> schemes);

struct PerClassRow {
  ClassLabel label;
  ClassScore score;
  // False for classes with no gold support; they get no weight.
  bool weighted = true;
};

struct AggregateEntry {
  WeightingScheme scheme;
  std::optional<double> score;  // empty if the scheme is undefined here
  std::optional<WeightVector> weights;  // empty for micro
};

struct ClassificationReport {
  std::string model_id;
  std::string run_id;
  std::size_t n_samples = 0;
  // Descending support, then label.
  std::vector<PerClassRow> per_class;
  std::vector<AggregateEntry> aggregates;
  std::vector<std::string> warnings;

  const AggregateEntry* find(const WeightingScheme& scheme) const;
};

ClassificationReport build_report(const EvaluationRun& run,
                                  const ReportConfig& config);

struct SchemeSummary {
  WeightingScheme scheme;
  std::vector<double> scores;
  std::optional<double> mean;
  std::optional<double> stddev;  // sample std, needs >= 2 scores
};

struct RunSummary {
  std::string model_id;
  std::size_t n_runs = 0;
  std::vector<SchemeSummary> schemes;
};

// Per-scheme mean and sample standard deviation over several reports.
RunSummary summarize_runs(std::span<const ClassificationReport> reports,
                          std::span<const WeightingScheme> schemes);

struct SchemeComparison {
  WeightingScheme scheme;
  std::vector<double> scores_a;
  std::vector<double> scores_b;
  std::optional<double> mean_a, std_a, mean_b, std_b;
  std::optional<ComparisonResult> result;
  std::vector<std::string> notes;
};

struct ComparisonReport {
  std::string model_a;
  std::string model_b;
  std::size_t runs_a = 0;
  std::size_t runs_b = 0;
  std::vector<SchemeComparison> schemes;
  std::vector<std::string> warnings;
};

// Needs >= 2 runs per model. Cohen's d is omitted (with a note) when the
// run counts differ.
ComparisonReport build_comparison(std::span<const ClassificationReport> a,
                                  std::span<const ClassificationReport> b,
                                  std::span<const WeightingScheme> schemes);

struct WeightColumn {
  WeightingScheme scheme;
  WeightVector weights;
  DesiderataReport desiderata;
};

struct WeightTable {
  ClassCounts counts;
  // Descending count, then label.
  std::vector<ClassLabel> order;
  std::vector<WeightColumn> columns;
  std::vector<std::string> warnings;
};

// One column per requested scheme; micro is skipped. Errors from
// class_weights propagate.
WeightTable build_weight_table(const ClassCounts& counts,
                               std::span<const WeightingScheme> schemes,
                               const WeightOptions& options = {});

}  // namespace wfeval

#endif  // WFEVAL_REPORT_H_
