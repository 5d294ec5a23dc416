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

// Two-sample comparison of per-run scores: Welch's t-test and Cohen's d for
// equal run counts, d = sqrt(2) (mu_1 - mu_2) / sqrt(s_1^2 + s_2^2).
// Variances are unbiased sample variances (divisor n - 1).

#ifndef WFEVAL_STATTEST_H_
#define WFEVAL_STATTEST_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wfeval {

// Scores of one model over several runs. At least two finite scores.
class RunGroup {
 public:
  RunGroup(std::string model_id, std::vector<double> scores);

  const std::string& model_id() const noexcept { return model_id_; }
  const std::vector<double>& scores() const noexcept { return scores_; }
  std::size_t size() const noexcept { return scores_.size(); }

  double mean() const;
  double variance() const;  // n - 1 divisor
  double stddev() const;

 private:
  std::string model_id_;
  std::vector<double> scores_;
};

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p_value = 1.0;  // two-sided
};

enum class EffectSize { kNegligible, kVerySmall, kSmall, kMedium, kLarge, kVeryLarge, kHuge };

struct ComparisonResult {
  WelchResult welch;
  // Empty when the groups have different run counts.
  std::optional<double> cohens_d;
  std::optional<EffectSize> effect;
};

// Throws Error(kUnsupported) for unequal group sizes and
// Error(kDegenerateVariance) when both variances are zero.
double cohens_d(const RunGroup& a, const RunGroup& b);

// Throws Error(kDegenerateVariance) when both variances are zero.
WelchResult welch_t_test(const RunGroup& a, const RunGroup& b);

// Welch test plus Cohen's d when the run counts match.
ComparisonResult compare_groups(const RunGroup& a, const RunGroup& b);

// Sawilowsky's scale on |d|: 0.01 very small, 0.2 small, 0.5 medium,
// 0.8 large, 1.2 very large, 2.0 huge.
EffectSize effect_label(double d);
std::string_view effect_size_name(EffectSize e);

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided tail P(|T| >= |t|) of Student's t with `df` degrees of freedom.
double student_t_two_sided_p(double t, double df);

// P(T <= t).
double student_t_cdf(double t, double df);

}  // namespace wfeval

#endif  // WFEVAL_STATTEST_H_
