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

#include <cmath>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include <fmt/format.h>
#include <gtest/gtest.h>

#include "json.hpp"
#include "oracle.h"
#include "wfeval/error.h"
#include "wfeval/render.h"

namespace wfeval {
namespace {

EvaluationRun make_run(const std::vector<std::string>& gold,
                       const std::vector<std::string>& pred,
                       std::optional<std::string> na = std::nullopt,
                       std::string run_id = "r") {
  std::vector<LabeledPair> pairs;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    pairs.push_back({ClassLabel(gold[i]), ClassLabel(pred[i])});
  }
  std::optional<ClassLabel> na_label;
  if (na) na_label.emplace(*na);
  return EvaluationRun(std::move(pairs), na_label, "m", std::move(run_id));
}

EvaluationRun worked() { return make_run({"A", "A", "A", "B"}, {"A", "A", "B", "B"}); }

double score_of(const ClassificationReport& r, const WeightingScheme& s) {
  const AggregateEntry* a = r.find(s);
  EXPECT_NE(a, nullptr);
  EXPECT_TRUE(a && a->score);
  return a && a->score ? *a->score : NAN;
}

TEST(BuildReport, WorkedFixture) {
  const auto r = build_report(worked(), {});
  ASSERT_EQ(r.aggregates.size(), 5u);
  EXPECT_EQ(r.aggregates[0].scheme, WeightingScheme::micro());
  EXPECT_EQ(r.aggregates[4].scheme, WeightingScheme::macro());
  EXPECT_NEAR(score_of(r, WeightingScheme::micro()), 0.75, 1e-15);
  EXPECT_NEAR(score_of(r, WeightingScheme::class_weighted()), 0.7666666666666667, 1e-15);
  EXPECT_NEAR(score_of(r, WeightingScheme::macro()), 0.7333333333333333, 1e-15);
  // raw entropy weights (3 log2(4/3), 2) normalized
  EXPECT_NEAR(score_of(r, WeightingScheme::entropy()), 0.7178251395461792, 1e-12);
  const double wa = std::pow(3.0, 0.75) / (std::pow(3.0, 0.75) + 1.0);
  EXPECT_NEAR(score_of(r, WeightingScheme::dodrans()), wa * 0.8 + (1 - wa) * 2.0 / 3.0,
              1e-12);
  ASSERT_EQ(r.per_class.size(), 2u);
  EXPECT_EQ(r.per_class[0].label.name(), "A");  // larger support first
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("D1"), std::string::npos);
  EXPECT_NE(r.warnings[0].find("A"), std::string::npos);
}

TEST(BuildReport, PerfectPredictionScoresOne) {
  const auto r = build_report(make_run({"A", "B", "C", "A"}, {"A", "B", "C", "A"}), {});
  for (const auto& a : r.aggregates) EXPECT_NEAR(*a.score, 1.0, 1e-15) << a.scheme.name();
}

TEST(BuildReport, NegativeClassExcluded) {
  ReportConfig config;
  config.na_label = ClassLabel("NA");
  const auto run = make_run({"A", "A", "NA", "B"}, {"A", "B", "B", "NA"}, "NA");
  const auto r = build_report(run, config);
  for (const auto& row : r.per_class) EXPECT_NE(row.label.name(), "NA");
  EXPECT_NEAR(score_of(r, WeightingScheme::micro()), 1.0 / 3.0, 1e-15);
  // A: P=1, R=1/2 -> F=2/3; B: P=0, R=0 -> 0; support 2 and 1
  EXPECT_NEAR(score_of(r, WeightingScheme::class_weighted()), 2.0 / 3.0 * 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(score_of(r, WeightingScheme::macro()), 1.0 / 3.0, 1e-15);

  config.include_na = true;
  const auto with_na = build_report(run, config);
  EXPECT_EQ(with_na.per_class.size(), 3u);
  EXPECT_NEAR(score_of(with_na, WeightingScheme::micro()), 0.25, 1e-15);
}

TEST(BuildReport, PredictionOnlyClassGetsNoWeight) {
  const auto r = build_report(make_run({"A", "A", "B"}, {"A", "C", "B"}), {});
  const auto it = std::find_if(r.per_class.begin(), r.per_class.end(),
                               [](const auto& row) { return row.label.name() == "C"; });
  ASSERT_NE(it, r.per_class.end());
  EXPECT_FALSE(it->weighted);
  EXPECT_TRUE(it->score.zero_division);
  double mean = 0.0;
  int n = 0;
  for (const auto& row : r.per_class) {
    if (!row.weighted) continue;
    mean += row.score.f_beta;
    ++n;
  }
  EXPECT_NEAR(score_of(r, WeightingScheme::macro()), mean / n, 1e-12);
  bool warned = false;
  for (const auto& w : r.warnings) warned |= w.find("absent from gold") != std::string::npos;
  EXPECT_TRUE(warned);
}

TEST(BuildReport, SingleClassEntropyIsUndefined) {
  const auto r = build_report(make_run({"A", "A"}, {"A", "B"}), {});
  const AggregateEntry* e = r.find(WeightingScheme::entropy());
  ASSERT_NE(e, nullptr);
  EXPECT_FALSE(e->score);
  EXPECT_NEAR(score_of(r, WeightingScheme::macro()), 2.0 / 3.0, 1e-15);
}

TEST(BuildReport, ExternalCounts) {
  ReportConfig config;
  config.external_counts = ClassCounts({{ClassLabel("A"), 1}, {ClassLabel("B"), 3}});
  config.weight_source = "train";
  const auto r = build_report(worked(), config);
  EXPECT_NEAR(score_of(r, WeightingScheme::class_weighted()), 0.25 * 0.8 + 0.75 * 2.0 / 3.0,
              1e-15);

  config.external_counts = ClassCounts({{ClassLabel("A"), 1}, {ClassLabel("Z"), 3}});
  EXPECT_THROW(build_report(worked(), config), Error);
}

TEST(BuildReport, SchemeFilterAndOrder) {
  ReportConfig config;
  config.schemes = {WeightingScheme::macro(), WeightingScheme::power(0.5),
                    WeightingScheme::micro(), WeightingScheme::macro()};
  const auto r = build_report(worked(), config);
  ASSERT_EQ(r.aggregates.size(), 3u);
  EXPECT_EQ(r.aggregates[0].scheme, WeightingScheme::micro());
  EXPECT_EQ(r.aggregates[1].scheme, WeightingScheme::macro());
  EXPECT_EQ(r.aggregates[2].scheme, WeightingScheme::power(0.5));
}

TEST(BuildReport, RandomRunsMatchOracle) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    const bool with_na = iter % 2 == 1;
    const auto pairs = oracle::random_pairs(rng, 200, 8, with_na);
    std::vector<std::string> g, p;
    for (const auto& [a, b] : pairs) {
      g.push_back(a);
      p.push_back(b);
    }
    ReportConfig config;
    if (with_na) config.na_label = ClassLabel("NA");
    const auto r = build_report(make_run(g, p, with_na ? std::optional<std::string>("NA")
                                                       : std::nullopt),
                                config);
    EXPECT_NEAR(score_of(r, WeightingScheme::micro()),
                oracle::micro(pairs, 1.0, with_na ? std::optional<std::string>("NA")
                                                  : std::nullopt),
                1e-12);
    for (const auto& a : r.aggregates) {
      if (a.score) {
        EXPECT_GE(*a.score, 0.0);
        EXPECT_LE(*a.score, 1.0 + 1e-15);
      }
    }
  }
}

TEST(Summaries, MeanAndSampleStd) {
  std::vector<ClassificationReport> reports;
  const std::vector<std::vector<std::string>> preds{
      {"A", "A", "B", "B"}, {"A", "A", "A", "B"}, {"B", "A", "B", "B"}};
  for (const auto& p : preds) {
    reports.push_back(build_report(make_run({"A", "A", "A", "B"}, p), {}));
  }
  const auto all = WeightingScheme::standard();
  const RunSummary s = summarize_runs(reports, all);
  EXPECT_EQ(s.n_runs, 3u);
  const auto& micro = s.schemes.front();
  ASSERT_EQ(micro.scores.size(), 3u);
  EXPECT_NEAR(*micro.mean, (0.75 + 1.0 + 0.5) / 3.0, 1e-15);
  EXPECT_NEAR(*micro.stddev, 0.25, 1e-15);
}

TEST(Comparison, UnequalRunCountsOmitD) {
  std::vector<ClassificationReport> a, b;
  const std::vector<std::vector<std::string>> preds{
      {"A", "A", "B", "B"}, {"A", "A", "A", "B"}, {"B", "A", "B", "B"},
      {"A", "B", "B", "B"}, {"A", "A", "A", "A"}};
  for (std::size_t i = 0; i < 3; ++i) {
    a.push_back(build_report(make_run({"A", "A", "A", "B"}, preds[i]), {}));
  }
  for (std::size_t i = 0; i < 5; ++i) {
    b.push_back(build_report(make_run({"A", "A", "A", "B"}, preds[i]), {}));
  }
  const std::vector<WeightingScheme> schemes{WeightingScheme::micro()};
  const auto c = build_comparison(a, b, schemes);
  ASSERT_EQ(c.schemes.size(), 1u);
  ASSERT_TRUE(c.schemes[0].result);
  EXPECT_FALSE(c.schemes[0].result->cohens_d);
  EXPECT_GT(c.schemes[0].result->welch.p_value, 0.0);
  EXPECT_FALSE(c.warnings.empty());

  const auto same = build_comparison(a, a, schemes);
  EXPECT_EQ(same.schemes[0].result->welch.p_value, 1.0);
  EXPECT_EQ(*same.schemes[0].result->cohens_d, 0.0);
  EXPECT_EQ(*same.schemes[0].result->effect, EffectSize::kNegligible);

  EXPECT_THROW(build_comparison(std::span(a).first(1), b, schemes), Error);
}

TEST(WeightTableTest, SortedByCountWithDesiderata) {
  const ClassCounts c({{ClassLabel("A"), 100}, {ClassLabel("B"), 10}, {ClassLabel("C"), 1}});
  const std::vector<WeightingScheme> schemes{
      WeightingScheme::micro(), WeightingScheme::class_weighted(),
      WeightingScheme::dodrans(), WeightingScheme::entropy(), WeightingScheme::macro()};
  const auto t = build_weight_table(c, schemes);
  EXPECT_EQ(t.columns.size(), 4u);  // micro skipped
  EXPECT_EQ(t.order.front().name(), "A");
  EXPECT_FALSE(t.columns[2].desiderata.d1.passed);
  EXPECT_FALSE(t.warnings.empty());
  EXPECT_THROW(build_weight_table(ClassCounts({{ClassLabel("A"), 4}}),
                                  std::vector{WeightingScheme::entropy()}),
               Error);
}

// Rendering ------------------------------------------------------------------

std::string render(const ClassificationReport& r, OutputFormat f, bool percent = false) {
  std::stringstream out;
  render_reports(out, std::span(&r, 1), std::nullopt, {}, {f, percent});
  return out.str();
}

TEST(Render, JsonKeysAndFullPrecision) {
  const auto r = build_report(worked(), {});
  const auto j = nlohmann::json::parse(render(r, OutputFormat::kJson));
  for (const char* key : {"per_class", "aggregates", "warnings", "config"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  for (const auto& a : r.aggregates) {
    EXPECT_EQ(j["aggregates"][a.scheme.name()].get<double>(), *a.score);
  }
  EXPECT_EQ(j["per_class"][0]["recall"].get<double>(), r.per_class[0].score.recall);
  EXPECT_EQ(j["config"]["beta"].get<double>(), 1.0);
}

TEST(Render, TextMatchesJsonToFourDecimals) {
  const auto r = build_report(worked(), {});
  const std::string text = render(r, OutputFormat::kText);
  const auto j = nlohmann::json::parse(render(r, OutputFormat::kJson));
  for (const auto& a : r.aggregates) {
    const std::regex line("\\n" + a.scheme.name() + "\\s+([0-9.]+)\\n");
    std::smatch m;
    ASSERT_TRUE(std::regex_search(text, m, line)) << a.scheme.name();
    EXPECT_EQ(m[1].str(), fmt::format("{:.4f}", j["aggregates"][a.scheme.name()].get<double>()));
  }
}

TEST(Render, CsvAggregates) {
  const auto r = build_report(worked(), {});
  const std::string csv = render(r, OutputFormat::kCsv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "run_id,scope,name,metric,value");
  EXPECT_NE(csv.find("r,aggregate,micro,score,0.75\n"), std::string::npos);
  EXPECT_NE(csv.find("r,class,A,f_beta,0.8\n"), std::string::npos);
}

TEST(Render, PercentScalesScores) {
  const auto r = build_report(worked(), {});
  const auto j = nlohmann::json::parse(render(r, OutputFormat::kJson, true));
  EXPECT_DOUBLE_EQ(j["aggregates"]["micro"].get<double>(), 75.0);
}

TEST(Render, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("Cause-Effect(e1,e2)"), "\"Cause-Effect(e1,e2)\"");
  EXPECT_EQ(csv_field("a\"b"), "\"a\"\"b\"");
}

TEST(Render, DatasetStatsUndefined) {
  DatasetStats s;
  s.n_classes = 1;
  s.n_samples = 5;
  s.pct_na = 100.0;
  std::stringstream text, json;
  render_dataset_stats(text, s, "test", ClassLabel("NA"), {OutputFormat::kText, false});
  render_dataset_stats(json, s, "test", ClassLabel("NA"), {OutputFormat::kJson, false});
  EXPECT_NE(text.str().find("undefined"), std::string::npos);
  const auto j = nlohmann::json::parse(json.str());
  EXPECT_TRUE(j["perplexity_without_na"].is_null());
  EXPECT_EQ(j["split"], "test");
}

}  // namespace
}  // namespace wfeval
