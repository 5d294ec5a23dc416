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

#include "wfeval/report.h"

#include <algorithm>
#include <map>
#include <string_view>
#include <utility>

#include <fmt/format.h>

#include "wfeval/error.h"

namespace wfeval {
namespace {

int standard_rank(const WeightingScheme& s) {
  using Kind = WeightingScheme::Kind;
  switch (s.kind()) {
    case Kind::kMicro: return 0;
    case Kind::kClassWeighted: return 1;
    case Kind::kDodrans: return 2;
    case Kind::kEntropy: return 3;
    case Kind::kMacro: return 4;
    case Kind::kPower: return 5;
  }
  return 5;
}

std::string join_labels(const std::vector<ClassLabel>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ", ";
    out += l.name();
  }
  return out;
}

bool has_scheme(std::span<const WeightingScheme> schemes,
                WeightingScheme::Kind kind) {
  return std::any_of(schemes.begin(), schemes.end(),
                     [&](const auto& s) { return s.kind() == kind; });
}

// Sample mean and standard deviation, the latter only for >= 2 values.
std::pair<std::optional<double>, std::optional<double>> mean_std(
    const std::vector<double>& xs) {
  if (xs.empty()) return {};
  if (xs.size() == 1) return {xs.front(), std::nullopt};
  const RunGroup g("", xs);
  return {g.mean(), g.stddev()};
}

}  // namespace

std::vector<WeightingScheme> canonical_scheme_order(
    std::span<const WeightingScheme> schemes) {
  std::vector<WeightingScheme> out;
  for (const auto& s : schemes) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return standard_rank(a) < standard_rank(b);
  });
  return out;
}

std::vector<WeightingScheme> ReportConfig::effective_schemes() const {
  if (schemes.empty()) {
    const auto all = WeightingScheme::standard();
    return {all.begin(), all.end()};
  }
  return canonical_scheme_order(schemes);
}

const AggregateEntry* ClassificationReport::find(
    const WeightingScheme& scheme) const {
  for (const auto& a : aggregates) {
    if (a.scheme == scheme) return &a;
  }
  return nullptr;
}

ClassificationReport build_report(const EvaluationRun& run,
                                  const ReportConfig& config) {
  const bool include_na = config.effective_include_na();
  const std::optional<ClassLabel> excluded =
      include_na ? std::nullopt : config.na_label;

  ClassificationReport report;
  report.model_id = run.model_id();
  report.run_id = run.run_id();
  report.n_samples = run.size();

  const ConfusionCounts confusion(run);
  const ClassScores scores = per_class_f(confusion, config.beta);

  // Weight counts, with the negative class split off.
  ClassCounts::Map weight_map;
  std::uint64_t na_count = 0;
  if (config.external_counts) {
    weight_map = config.external_counts->by_class();
  } else {
    for (const auto& [label, c] : confusion) {
      if (c.support() > 0) weight_map.emplace(label, c.support());
    }
  }
  if (excluded) {
    if (auto it = weight_map.find(*excluded); it != weight_map.end()) {
      na_count = it->second;
      weight_map.erase(it);
    }
  }
  std::optional<ClassCounts> weight_counts;
  if (!weight_map.empty()) weight_counts.emplace(std::move(weight_map));

  std::vector<ClassLabel> zero_division;
  std::vector<ClassLabel> unweighted;
  std::vector<ClassLabel> missing_external;
  for (const auto& [label, s] : scores) {
    if (excluded && label == *excluded) continue;
    const bool weighted = weight_counts && weight_counts->contains(label);
    report.per_class.push_back({label, s, weighted});
    if (s.zero_division) zero_division.push_back(label);
    if (!weighted) {
      if (s.support == 0) {
        unweighted.push_back(label);
      } else {
        missing_external.push_back(label);
      }
    }
  }
  std::stable_sort(report.per_class.begin(), report.per_class.end(),
                   [](const PerClassRow& a, const PerClassRow& b) {
                     if (a.score.support != b.score.support) {
                       return a.score.support > b.score.support;
                     }
                     return a.label < b.label;
                   });

  const auto schemes = config.effective_schemes();
  const WeightOptions weight_options{
      config.entropy_include_na ? na_count : std::uint64_t{0}};

  for (const auto& scheme : schemes) {
    AggregateEntry entry{scheme, std::nullopt, std::nullopt};
    if (scheme.kind() == WeightingScheme::Kind::kMicro) {
      if (run.na_label() == config.na_label) {
        entry.score = micro_score(run, config.beta, include_na).f_beta;
      } else {
        const EvaluationRun relabeled(run.pairs(), config.na_label,
                                      run.model_id(), run.run_id());
        entry.score = micro_score(relabeled, config.beta, include_na).f_beta;
      }
    } else if (!weight_counts) {
      report.warnings.push_back(fmt::format(
          "{}: undefined, no positive class has a weight count",
          scheme.name()));
    } else {
      try {
        entry.weights = class_weights(*weight_counts, scheme, weight_options);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kDegenerateDistribution) throw;
        report.warnings.push_back(
            fmt::format("{}: undefined, {}", scheme.name(), e.what()));
      }
      if (entry.weights) entry.score = aggregate_score(scores, *entry.weights);
    }
    report.aggregates.push_back(std::move(entry));
  }

  if (weight_counts && has_scheme(schemes, WeightingScheme::Kind::kEntropy)) {
    const auto dominant =
        entropy_dominant_classes(*weight_counts, weight_options.entropy_extra_total);
    if (!dominant.empty()) {
      report.warnings.push_back(fmt::format(
          "entropy: classes with proportion above 1/e get less weight than "
          "smaller classes (D1 violated): {}",
          join_labels(dominant)));
    }
  }
  if (!zero_division.empty()) {
    report.warnings.push_back(fmt::format(
        "zero division in precision or recall, reported as 0: {}",
        join_labels(zero_division)));
  }
  if (!unweighted.empty()) {
    report.warnings.push_back(fmt::format(
        "classes predicted but absent from gold get no weight: {}",
        join_labels(unweighted)));
  }
  if (!missing_external.empty()) {
    report.warnings.push_back(fmt::format(
        "classes missing from the weight counts get no weight: {}",
        join_labels(missing_external)));
  }
  return report;
}

RunSummary summarize_runs(std::span<const ClassificationReport> reports,
                          std::span<const WeightingScheme> schemes) {
  RunSummary summary;
  summary.n_runs = reports.size();
  if (!reports.empty()) summary.model_id = reports.front().model_id;
  for (const auto& scheme : schemes) {
    SchemeSummary s{scheme, {}, std::nullopt, std::nullopt};
    for (const auto& r : reports) {
      const AggregateEntry* a = r.find(scheme);
      if (a && a->score) s.scores.push_back(*a->score);
    }
    std::tie(s.mean, s.stddev) = mean_std(s.scores);
    summary.schemes.push_back(std::move(s));
  }
  return summary;
}

ComparisonReport build_comparison(std::span<const ClassificationReport> a,
                                  std::span<const ClassificationReport> b,
                                  std::span<const WeightingScheme> schemes) {
  if (a.size() < 2 || b.size() < 2) {
    throw Error(ErrorKind::kInvalidInput,
                fmt::format("comparison needs at least 2 runs per model, got "
                            "{} and {}",
                            a.size(), b.size()));
  }
  ComparisonReport out;
  out.model_a = a.front().model_id;
  out.model_b = b.front().model_id;
  out.runs_a = a.size();
  out.runs_b = b.size();
  if (a.size() != b.size()) {
    out.warnings.push_back(fmt::format(
        "Cohen's d omitted: unequal run counts ({} vs {}); Welch's test is "
        "still reported",
        a.size(), b.size()));
  }

  std::optional<Error> degenerate;
  for (const auto& scheme : schemes) {
    SchemeComparison row{scheme, {}, {}, {}, {}, {}, {}, std::nullopt, {}};
    for (const auto& r : a) {
      if (const auto* e = r.find(scheme); e && e->score) row.scores_a.push_back(*e->score);
    }
    for (const auto& r : b) {
      if (const auto* e = r.find(scheme); e && e->score) row.scores_b.push_back(*e->score);
    }
    std::tie(row.mean_a, row.std_a) = mean_std(row.scores_a);
    std::tie(row.mean_b, row.std_b) = mean_std(row.scores_b);

    if (row.scores_a.size() != a.size() || row.scores_b.size() != b.size()) {
      row.notes.push_back("scheme undefined for some runs; no test");
    } else {
      try {
        row.result = compare_groups(RunGroup(out.model_a, row.scores_a),
                                    RunGroup(out.model_b, row.scores_b));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kDegenerateVariance) throw;
        row.notes.push_back(e.what());
        degenerate = e;
      }
    }
    out.schemes.push_back(std::move(row));
  }
  // A comparison with no testable scheme is an error, not an empty table.
  const bool any_result = std::any_of(
      out.schemes.begin(), out.schemes.end(),
      [](const SchemeComparison& s) { return s.result.has_value(); });
  if (degenerate && !any_result) throw *degenerate;
  return out;
}

WeightTable build_weight_table(const ClassCounts& counts,
                               std::span<const WeightingScheme> schemes,
                               const WeightOptions& options) {
  WeightTable table{counts, {}, {}, {}};
  for (const auto& [label, n] : counts) table.order.push_back(label);
  std::stable_sort(table.order.begin(), table.order.end(),
                   [&](const ClassLabel& x, const ClassLabel& y) {
                     return counts.at(x) > counts.at(y);
                   });
  for (const auto& scheme : schemes) {
    if (scheme.kind() == WeightingScheme::Kind::kMicro) continue;
    WeightVector w = class_weights(counts, scheme, options);
    DesiderataReport d = validate_desiderata(counts, w);
    table.columns.push_back({scheme, std::move(w), std::move(d)});
  }
  if (has_scheme(schemes, WeightingScheme::Kind::kEntropy)) {
    const auto dominant = entropy_dominant_classes(counts, options.entropy_extra_total);
    if (!dominant.empty()) {
      table.warnings.push_back(fmt::format(
          "entropy: classes with proportion above 1/e get less weight than "
          "smaller classes (D1 violated): {}",
          join_labels(dominant)));
    }
  }
  return table;
}

}  // namespace wfeval
