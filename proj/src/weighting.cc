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

#include "wfeval/weighting.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <system_error>

#include <fmt/format.h>

#include "wfeval/error.h"

namespace wfeval {
namespace {

double entropy_term(std::uint64_t n, std::uint64_t total) {
  // -n log2(n / N), written as n log2(N / n) so the sign is never negative
  // through rounding.
  const double nd = static_cast<double>(n);
  return nd * std::log2(static_cast<double>(total) / nd);
}

bool exceeds(double larger_expected, double smaller_expected, double rel) {
  return smaller_expected - larger_expected >
         rel * std::max(std::abs(larger_expected), std::abs(smaller_expected));
}

}  // namespace

// ClassCounts ----------------------------------------------------------------

ClassCounts::ClassCounts(Map counts) : counts_(std::move(counts)) {
  if (counts_.empty()) {
    throw Error(ErrorKind::kInvalidInput, "class counts need at least one class");
  }
  for (const auto& [label, n] : counts_) {
    if (n == 0) {
      throw Error(ErrorKind::kInvalidInput,
                  fmt::format("class '{}' has a zero count", label.name()));
    }
    total_ += n;
  }
}

ClassCounts ClassCounts::from_support(const ConfusionCounts& confusion,
                                      const std::optional<ClassLabel>& exclude) {
  Map m;
  for (const auto& [label, c] : confusion) {
    if (c.support() == 0) continue;
    if (exclude && label == *exclude) continue;
    m.emplace(label, c.support());
  }
  return ClassCounts(std::move(m));
}

ClassCounts ClassCounts::from_labels(const std::vector<ClassLabel>& labels,
                                     const std::optional<ClassLabel>& exclude) {
  Map m;
  for (const auto& l : labels) {
    if (exclude && l == *exclude) continue;
    ++m[l];
  }
  return ClassCounts(std::move(m));
}

std::uint64_t ClassCounts::at(const ClassLabel& label) const {
  auto it = counts_.find(label);
  if (it == counts_.end()) {
    throw Error(ErrorKind::kInconsistentInput,
                fmt::format("no count for class '{}'", label.name()));
  }
  return it->second;
}

// WeightingScheme ------------------------------------------------------------

WeightingScheme WeightingScheme::power(double exponent) {
  if (!(exponent >= 0.0 && exponent <= 1.0)) {
    throw Error(ErrorKind::kConfiguration,
                fmt::format("power exponent must lie in [0, 1], got {}",
                            exponent));
  }
  return WeightingScheme(Kind::kPower, exponent);
}

WeightingScheme WeightingScheme::parse(std::string_view name) {
  if (name == "micro") return micro();
  if (name == "weighted") return class_weighted();
  if (name == "dodrans") return dodrans();
  if (name == "entropy") return entropy();
  if (name == "macro") return macro();
  constexpr std::string_view kPowerPrefix = "power:";
  if (name.starts_with(kPowerPrefix)) {
    const std::string_view arg = name.substr(kPowerPrefix.size());
    double p = 0.0;
    const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p);
    if (ec == std::errc() && end == arg.data() + arg.size() && !arg.empty()) {
      return power(p);
    }
  }
  throw Error(ErrorKind::kConfiguration,
              fmt::format("unknown weighting scheme '{}' (expected micro, "
                          "weighted, dodrans, entropy, macro or power:<p>)",
                          name));
}

std::array<WeightingScheme, 5> WeightingScheme::standard() {
  return {micro(), class_weighted(), dodrans(), entropy(), macro()};
}

std::string WeightingScheme::name() const {
  switch (kind_) {
    case Kind::kMicro: return "micro";
    case Kind::kClassWeighted: return "weighted";
    case Kind::kDodrans: return "dodrans";
    case Kind::kEntropy: return "entropy";
    case Kind::kMacro: return "macro";
    case Kind::kPower: return fmt::format("power:{}", exponent_);
  }
  return "unknown";
}

// WeightVector ---------------------------------------------------------------

WeightVector::WeightVector(Map weights) : weights_(std::move(weights)) {
  for (const auto& [label, w] : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorKind::kInvalidInput,
                  fmt::format("weight of class '{}' must be finite and >= 0, "
                              "got {}",
                              label.name(), w));
    }
  }
}

double WeightVector::at(const ClassLabel& label) const {
  auto it = weights_.find(label);
  if (it == weights_.end()) {
    throw Error(ErrorKind::kInconsistentInput,
                fmt::format("no weight for class '{}'", label.name()));
  }
  return it->second;
}

double WeightVector::sum() const {
  double s = 0.0;
  for (const auto& [label, w] : weights_) s += w;
  return s;
}

// Operations -----------------------------------------------------------------

WeightVector class_weights(const ClassCounts& counts,
                           const WeightingScheme& scheme,
                           const WeightOptions& options) {
  using Kind = WeightingScheme::Kind;
  double exponent = 0.0;
  switch (scheme.kind()) {
    case Kind::kMicro:
      throw Error(ErrorKind::kUnsupportedScheme,
                  "micro averaging pools counts and has no class weights");
    case Kind::kClassWeighted: exponent = 1.0; break;
    case Kind::kDodrans: exponent = 0.75; break;
    case Kind::kMacro: exponent = 0.0; break;
    case Kind::kPower: exponent = scheme.exponent(); break;
    case Kind::kEntropy: break;
  }

  const std::uint64_t entropy_total = counts.total() + options.entropy_extra_total;
  WeightVector::Map raw;
  double raw_sum = 0.0;
  for (const auto& [label, n] : counts) {
    const double r = scheme.kind() == Kind::kEntropy
                         ? entropy_term(n, entropy_total)
                         : std::pow(static_cast<double>(n), exponent);
    raw.emplace(label, r);
    raw_sum += r;
  }

  if (!(raw_sum > 0.0)) {
    throw Error(ErrorKind::kDegenerateDistribution,
                fmt::format("{} weights are all zero: a single class holds "
                            "the entire distribution",
                            scheme.name()));
  }
  for (auto& [label, w] : raw) w /= raw_sum;
  return WeightVector(std::move(raw));
}

double aggregate_score(const std::map<ClassLabel, double>& scores,
                       const WeightVector& weights) {
  double total = 0.0;
  for (const auto& [label, w] : weights) {
    auto it = scores.find(label);
    if (it == scores.end()) {
      throw Error(ErrorKind::kInconsistentInput,
                  fmt::format("class '{}' is weighted but has no score",
                              label.name()));
    }
    total += w * it->second;
  }
  return total;
}

double aggregate_score(const ClassScores& scores, const WeightVector& weights) {
  std::map<ClassLabel, double> f;
  for (const auto& [label, s] : scores) f.emplace(label, s.f_beta);
  return aggregate_score(f, weights);
}

DesiderataReport validate_desiderata(const ClassCounts& counts,
                                     const WeightVector& weights,
                                     const DesiderataTolerance& tol) {
  if (counts.size() != weights.size() ||
      !std::equal(counts.begin(), counts.end(), weights.begin(),
                  [](const auto& a, const auto& b) { return a.first == b.first; })) {
    throw Error(ErrorKind::kInconsistentInput,
                "counts and weights must cover the same classes");
  }

  DesiderataReport report;
  report.weight_sum = weights.sum();
  report.d0.passed = std::abs(report.weight_sum - 1.0) <= tol.sum;

  for (const auto& [ci, ni] : counts) {
    const double wi = weights.at(ci);
    for (const auto& [cj, nj] : counts) {
      if (ci == cj || ni < nj) continue;
      const double wj = weights.at(cj);
      if (exceeds(wi, wj, tol.relative)) {
        report.d1.passed = false;
        report.d1.witnesses.emplace_back(ci, cj);
      }
      const double per_i = wi / static_cast<double>(ni);
      const double per_j = wj / static_cast<double>(nj);
      if (exceeds(per_j, per_i, tol.relative)) {
        report.d2.passed = false;
        report.d2.witnesses.emplace_back(ci, cj);
      }
    }
  }
  return report;
}

std::vector<ClassLabel> entropy_dominant_classes(const ClassCounts& counts,
                                                 std::uint64_t extra_total) {
  const double total = static_cast<double>(counts.total() + extra_total);
  const double threshold = 1.0 / std::numbers::e;
  std::vector<ClassLabel> out;
  for (const auto& [label, n] : counts) {
    if (static_cast<double>(n) / total > threshold) out.push_back(label);
  }
  return out;
}

}  // namespace wfeval
