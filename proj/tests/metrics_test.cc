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

#include <limits>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.h"
#include "wfeval/error.h"

namespace wfeval {
namespace {

EvaluationRun make_run(const std::vector<std::string>& gold,
                       const std::vector<std::string>& pred,
                       std::optional<std::string> na = std::nullopt) {
  std::vector<LabeledPair> pairs;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    pairs.push_back({ClassLabel(gold[i]), ClassLabel(pred[i])});
  }
  std::optional<ClassLabel> na_label;
  if (na) na_label.emplace(*na);
  return EvaluationRun(std::move(pairs), na_label, "m", "r");
}

EvaluationRun from_oracle_pairs(const oracle::Pairs& pairs, bool with_na) {
  std::vector<std::string> g, p;
  for (const auto& [a, b] : pairs) {
    g.push_back(a);
    p.push_back(b);
  }
  return make_run(g, p, with_na ? std::optional<std::string>("NA") : std::nullopt);
}

const ClassLabel A("A");
const ClassLabel B("B");

TEST(ClassLabel, RejectsEmpty) {
  EXPECT_THROW(ClassLabel(""), Error);
}

TEST(ClassLabel, CaseSensitive) {
  EXPECT_NE(ClassLabel("per:title"), ClassLabel("Per:title"));
}

TEST(EvaluationRun, RejectsEmpty) {
  try {
    EvaluationRun run({});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
  }
}

TEST(ConfusionCounts, MixedPrediction) {
  const ConfusionCounts c(make_run({"A", "A", "A", "B"}, {"A", "A", "B", "B"}));
  EXPECT_EQ(c.at(A), (ClassConfusion{2, 0, 1}));
  EXPECT_EQ(c.at(B), (ClassConfusion{1, 1, 0}));
  EXPECT_EQ(c.at(A).support(), 3u);
  EXPECT_EQ(c.total(), 4u);
}

TEST(ConfusionCounts, PerfectPrediction) {
  const ConfusionCounts c(make_run({"A", "B", "A"}, {"A", "B", "A"}));
  EXPECT_EQ(c.at(A), (ClassConfusion{2, 0, 0}));
  EXPECT_EQ(c.at(B), (ClassConfusion{1, 0, 0}));
}

TEST(ConfusionCounts, FullyWrongPrediction) {
  const ConfusionCounts c(make_run({"A", "A"}, {"B", "B"}));
  EXPECT_EQ(c.at(A), (ClassConfusion{0, 0, 2}));
  EXPECT_EQ(c.at(B), (ClassConfusion{0, 2, 0}));
  EXPECT_EQ(c.at(B).support(), 0u);
}

TEST(FBeta, WorkedValues) {
  EXPECT_DOUBLE_EQ(f_beta(3, 1, 2).value, 6.0 / 9.0);
  EXPECT_DOUBLE_EQ(f_beta(5, 0, 0).value, 1.0);
  const FScore degenerate = f_beta(0, 0, 0);
  EXPECT_EQ(degenerate.value, 0.0);
  EXPECT_TRUE(degenerate.zero_division);
  EXPECT_FALSE(f_beta(0, 1, 0).zero_division);
}

TEST(FBeta, BetaWeighsRecall) {
  // beta = 2: 5 tp / (5 tp + 4 fn + fp)
  EXPECT_DOUBLE_EQ(f_beta(3, 1, 2, 2.0).value, 15.0 / (15.0 + 8.0 + 1.0));
}

TEST(FBeta, RejectsBadBeta) {
  for (double beta : {0.0, -1.0, std::nan(""), std::numeric_limits<double>::infinity()}) {
    try {
      f_beta(1, 1, 1, beta);
      FAIL() << beta;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kConfiguration);
    }
  }
}

TEST(FBeta, BoundedAndMonotoneInTp) {
  for (std::uint64_t fp = 0; fp < 6; ++fp) {
    for (std::uint64_t fn = 0; fn < 6; ++fn) {
      double prev = -1.0;
      for (std::uint64_t tp = 0; tp < 20; ++tp) {
        const double f = f_beta(tp, fp, fn, 0.5).value;
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
        EXPECT_GE(f, prev);
        prev = f;
      }
    }
  }
}

TEST(PerClassF, WorkedExample) {
  const auto s = per_class_f(ConfusionCounts(
      make_run({"A", "A", "A", "B"}, {"A", "A", "B", "B"})));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s.at(A).precision, 1.0);
  EXPECT_DOUBLE_EQ(s.at(A).recall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.at(A).f_beta, 0.8);
  EXPECT_DOUBLE_EQ(s.at(B).f_beta, 2.0 / 3.0);
  EXPECT_FALSE(s.at(A).zero_division);
}

TEST(PerClassF, PerfectRun) {
  for (const auto& [label, s] :
       per_class_f(ConfusionCounts(make_run({"A", "B", "C"}, {"A", "B", "C"})))) {
    EXPECT_EQ(s.f_beta, 1.0) << label.name();
  }
}

TEST(PerClassF, OnlyObservedClasses) {
  const auto s = per_class_f(ConfusionCounts(make_run({"A", "A"}, {"A", "A"})));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_FALSE(s.contains(ClassLabel("C")));
}

TEST(PerClassF, PredictionOnlyClassIsFlagged) {
  const auto s = per_class_f(ConfusionCounts(make_run({"A", "A"}, {"B", "B"})));
  EXPECT_EQ(s.at(B).support, 0u);
  EXPECT_EQ(s.at(B).f_beta, 0.0);
  EXPECT_TRUE(s.at(B).zero_division);  // recall has no gold support
  EXPECT_TRUE(s.at(A).zero_division);  // precision: A never predicted
}

TEST(MicroF, ExcludesNegativeClass) {
  const auto run = make_run({"A", "A", "NA", "B"}, {"A", "B", "B", "NA"}, "NA");
  const MicroScore m = micro_score(run);
  EXPECT_DOUBLE_EQ(m.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.recall, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.f_beta, 1.0 / 3.0);
}

TEST(MicroF, PooledEqualsAccuracy) {
  const auto run = make_run({"A", "A", "A", "B"}, {"A", "A", "B", "B"});
  EXPECT_EQ(micro_f(run, 1.0, true), 0.75);
}

TEST(MicroF, ExcludingNaNeedsLabel) {
  const auto run = make_run({"A"}, {"A"});
  try {
    micro_f(run, 1.0, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfiguration);
  }
}

TEST(MicroF, AllNegativePredictionsScoreZero) {
  const auto run = make_run({"A", "B"}, {"NA", "NA"}, "NA");
  const MicroScore m = micro_score(run);
  EXPECT_EQ(m.f_beta, 0.0);
  EXPECT_TRUE(m.zero_division);  // precision 0/0
}

TEST(CheckKnownLabels, ReportsUnknown) {
  const auto run = make_run({"A", "X"}, {"A", "A"});
  EXPECT_NO_THROW(check_known_labels(run, {A, ClassLabel("X")}));
  EXPECT_THROW(check_known_labels(run, {A}), Error);
}

// Random runs checked against a per-class brute-force scan.
TEST(MetricsProperty, MatchesBruteForceOracle) {
  std::mt19937_64 rng(20240611);
  for (int iter = 0; iter < 400; ++iter) {
    const bool with_na = iter % 2 == 0;
    const auto pairs = oracle::random_pairs(rng, 200, 8, with_na);
    const auto run = from_oracle_pairs(pairs, with_na);
    const double beta = iter % 3 == 0 ? 0.5 : 1.0;
    const ConfusionCounts counts(run);
    const auto scores = per_class_f(counts, beta);
    const auto expected = oracle::per_class(pairs, beta);
    ASSERT_EQ(scores.size(), expected.size());

    std::uint64_t support_sum = 0, fp_sum = 0, fn_sum = 0;
    for (const auto& [label, s] : scores) {
      const auto& e = expected.at(label.name());
      EXPECT_NEAR(s.precision, e.precision, 1e-12);
      EXPECT_NEAR(s.recall, e.recall, 1e-12);
      EXPECT_NEAR(s.f_beta, e.f, 1e-12);
      EXPECT_EQ(s.support, e.support);
      support_sum += s.support;
      fp_sum += s.fp;
      fn_sum += s.fn;
    }
    EXPECT_EQ(support_sum, run.size());
    EXPECT_EQ(fp_sum, fn_sum);

    EXPECT_EQ(micro_f(run, 1.0, true), oracle::accuracy(pairs));
    if (with_na) {
      EXPECT_NEAR(micro_f(run, beta, false),
                  oracle::micro(pairs, beta, std::string("NA")), 1e-12);
    }
  }
}

}  // namespace
}  // namespace wfeval
