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

// Text, JSON and CSV renderings of reports. Text rounds scores to 4
// decimals and percentages to 1; JSON and CSV carry full precision.

#ifndef WFEVAL_RENDER_H_
#define WFEVAL_RENDER_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "wfeval/dataset_stats.h"
#include "wfeval/report.h"

namespace wfeval {

enum class OutputFormat { kText, kJson, kCsv };

// "text", "json" or "csv"; Error(kConfiguration) otherwise.
OutputFormat parse_output_format(std::string_view name);

struct RenderOptions {
  OutputFormat format = OutputFormat::kText;
  // Scale scores (P, R, F, aggregates, means, stds) by 100.
  bool percent = false;
};

// `summary` is rendered after the per-run reports when present.
void render_reports(std::ostream& out,
                    std::span<const ClassificationReport> reports,
                    const std::optional<RunSummary>& summary,
                    const ReportConfig& config, const RenderOptions& options);

void render_comparison(std::ostream& out, const ComparisonReport& report,
                       const ReportConfig& config,
                       const RenderOptions& options);

void render_weight_table(std::ostream& out, const WeightTable& table,
                         const std::string& count_source,
                         const RenderOptions& options);

void render_dataset_stats(std::ostream& out, const DatasetStats& stats,
                          const std::string& split,
                          const std::optional<ClassLabel>& na_label,
                          const RenderOptions& options);

// RFC 4180 field quoting.
std::string csv_field(std::string_view value);

}  // namespace wfeval

#endif  // WFEVAL_RENDER_H_
