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

#include "wfeval/stattest.h"

#include <cmath>
#include <algorithm>
#include <limits>
#include <numbers>
#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "wfeval/error.h"

namespace wfeval {
namespace {

constexpr int kMaxIterations = 500;
constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

// Continued fraction for I_x(a, b), modified Lentz evaluation.
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double step = d * c;
    h *= step;
    if (std::abs(step - 1.0) < kEpsilon) return h;
  }
  // Convergence is reached long before this for the parameter ranges used
  // here (a, b <= a few hundred).
  return h;
}

// `y` is 1 - x supplied by the caller so no precision is lost near x = 1.
double incomplete_beta(double a, double b, double x, double y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) + b * std::log(y);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, y) / b;
}

void require_spread(const RunGroup& a, const RunGroup& b) {
  if (a.variance() == 0.0 && b.variance() == 0.0) {
    throw Error(ErrorKind::kDegenerateVariance,
                fmt::format("scores of '{}' and '{}' both have zero variance",
                            a.model_id(), b.model_id()));
  }
}

}  // namespace

RunGroup::RunGroup(std::string model_id, std::vector<double> scores)
    : model_id_(std::move(model_id)), scores_(std::move(scores)) {
  if (scores_.size() < 2) {
    throw Error(ErrorKind::kInvalidInput,
                fmt::format("model '{}' needs at least 2 runs, got {}",
                            model_id_, scores_.size()));
  }
  for (double s : scores_) {
    if (!std::isfinite(s)) {
      throw Error(ErrorKind::kInvalidInput,
                  fmt::format("model '{}' has a non-finite score", model_id_));
    }
  }
}

double RunGroup::mean() const {
  return std::accumulate(scores_.begin(), scores_.end(), 0.0) /
         static_cast<double>(scores_.size());
}

double RunGroup::variance() const {
  const double m = mean();
  double ss = 0.0;
  for (double s : scores_) ss += (s - m) * (s - m);
  return ss / static_cast<double>(scores_.size() - 1);
}

double RunGroup::stddev() const { return std::sqrt(variance()); }

double cohens_d(const RunGroup& a, const RunGroup& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kUnsupported,
                fmt::format("Cohen's d needs equal run counts, got {} and {}",
                            a.size(), b.size()));
  }
  require_spread(a, b);
  return std::numbers::sqrt2 * (a.mean() - b.mean()) /
         std::sqrt(a.variance() + b.variance());
}

WelchResult welch_t_test(const RunGroup& a, const RunGroup& b) {
  require_spread(a, b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = a.variance() / na;
  const double vb = b.variance() / nb;
  const double se2 = va + vb;

  WelchResult r;
  r.t = (a.mean() - b.mean()) / std::sqrt(se2);
  r.df = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  r.p_value = std::max(student_t_two_sided_p(r.t, r.df),
                       std::numeric_limits<double>::min());
  return r;
}

ComparisonResult compare_groups(const RunGroup& a, const RunGroup& b) {
  ComparisonResult out;
  out.welch = welch_t_test(a, b);
  if (a.size() == b.size()) {
    out.cohens_d = cohens_d(a, b);
    out.effect = effect_label(*out.cohens_d);
  }
  return out;
}

EffectSize effect_label(double d) {
  const double m = std::abs(d);
  if (m >= 2.0) return EffectSize::kHuge;
  if (m >= 1.2) return EffectSize::kVeryLarge;
  if (m >= 0.8) return EffectSize::kLarge;
  if (m >= 0.5) return EffectSize::kMedium;
  if (m >= 0.2) return EffectSize::kSmall;
  if (m >= 0.01) return EffectSize::kVerySmall;
  return EffectSize::kNegligible;
}

std::string_view effect_size_name(EffectSize e) {
  switch (e) {
    case EffectSize::kNegligible: return "negligible";
    case EffectSize::kVerySmall: return "very small";
    case EffectSize::kSmall: return "small";
    case EffectSize::kMedium: return "medium";
    case EffectSize::kLarge: return "large";
    case EffectSize::kVeryLarge: return "very large";
    case EffectSize::kHuge: return "huge";
  }
  return "unknown";
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::kInvalidInput,
                fmt::format("incomplete beta undefined for a={}, b={}, x={}",
                            a, b, x));
  }
  return incomplete_beta(a, b, x, 1.0 - x);
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) {
    throw Error(ErrorKind::kInvalidInput,
                fmt::format("degrees of freedom must be positive, got {}", df));
  }
  if (std::isnan(t)) {
    throw Error(ErrorKind::kInvalidInput, "t statistic is NaN");
  }
  if (std::isinf(t)) return 0.0;
  const double t2 = t * t;
  // P(|T| >= |t|) = I_{df / (df + t^2)}(df / 2, 1 / 2)
  const double p = incomplete_beta(df / 2.0, 0.5, df / (df + t2), t2 / (df + t2));
  return std::clamp(p, 0.0, 1.0);
}

double student_t_cdf(double t, double df) {
  const double tail = student_t_two_sided_p(t, df) / 2.0;
  return t >= 0.0 ? 1.0 - tail : tail;
}

}  // namespace wfeval
