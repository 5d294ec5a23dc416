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

#include "wfeval/cli.h"

#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "wfeval/dataset_stats.h"
#include "wfeval/io.h"
#include "wfeval/render.h"
#include "wfeval/report.h"

namespace wfeval {
namespace {

// Flags shared by the subcommands that score runs.
struct ScoringFlags {
  std::string na_label;
  double beta = kDefaultBeta;
  std::vector<std::string> schemes;
  bool include_na = false;
  bool entropy_include_na = false;
  std::string counts_from;
  std::string labels_file;
  std::string input_format;
  std::string format = "text";
  bool percent = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--na-label", na_label,
                   "Negative class label (e.g. no_relation, NA, Other)");
    cmd.add_option("--beta", beta, "F-beta trade-off parameter")
        ->capture_default_str();
    cmd.add_option("--schemes", schemes,
                   "Comma-separated schemes: micro, weighted, dodrans, "
                   "entropy, macro, power:<p> (default: the first five)")
        ->delimiter(',');
    cmd.add_flag("--include-na", include_na,
                 "Score the negative class like any other class");
    cmd.add_flag("--entropy-include-na", entropy_include_na,
                 "Keep negative samples in the entropy class proportions");
    cmd.add_option("--counts-from", counts_from,
                   "Weight counts file (<label>\\t<count> per line) instead "
                   "of the gold support");
    cmd.add_option("--labels", labels_file,
                   "Known label list; unknown labels are an error");
    add_io_flags(cmd);
  }

  void add_io_flags(CLI::App& cmd) {
    cmd.add_option("--input-format", input_format,
                   "Run file format (tsv or jsonl); inferred from the "
                   "extension by default");
    cmd.add_option("--format", format, "Output format: text, json or csv")
        ->capture_default_str();
    cmd.add_flag("--percent", percent, "Report scores multiplied by 100");
  }

  std::optional<ClassLabel> na() const {
    if (na_label.empty()) return std::nullopt;
    return ClassLabel(na_label);
  }

  std::optional<RunFormat> run_format() const {
    if (input_format.empty()) return std::nullopt;
    return parse_run_format(input_format);
  }

  RenderOptions render_options() const {
    return {parse_output_format(format), percent};
  }

  std::vector<WeightingScheme> parsed_schemes() const {
    std::vector<WeightingScheme> out;
    for (const auto& s : schemes) out.push_back(WeightingScheme::parse(s));
    return out;
  }

  ReportConfig config() const {
    // Surfaces a bad beta before any file is read.
    (void)f_beta(0, 0, 0, beta);
    ReportConfig c;
    c.beta = beta;
    c.na_label = na();
    c.include_na = include_na;
    c.entropy_include_na = entropy_include_na;
    c.schemes = parsed_schemes();
    if (!counts_from.empty()) {
      c.external_counts = load_class_counts(counts_from);
      c.weight_source = counts_from;
    }
    return c;
  }
};

std::vector<ClassificationReport> score_runs(
    const std::vector<std::string>& paths, const std::string& model_id,
    const ScoringFlags& flags, const ReportConfig& config) {
  std::optional<std::set<ClassLabel>> known;
  if (!flags.labels_file.empty()) {
    const auto labels = load_label_list(flags.labels_file);
    known.emplace(labels.begin(), labels.end());
  }
  std::vector<ClassificationReport> reports;
  for (const auto& p : paths) {
    const RunFileDescriptor desc{p, flags.run_format(), model_id, ""};
    const EvaluationRun run = load_run(desc, config.na_label);
    if (known) check_known_labels(run, *known);
    reports.push_back(build_report(run, config));
  }
  return reports;
}

// Gold labels of a run file, or a plain one-label-per-line file.
std::vector<ClassLabel> load_gold_labels(const std::string& path,
                                         const std::optional<RunFormat>& format) {
  std::optional<RunFormat> resolved = format;
  if (!resolved) {
    try {
      resolved = infer_run_format(path);
    } catch (const Error&) {
      return load_label_list(path);
    }
  }
  const EvaluationRun run = load_run({path, resolved, "", ""});
  std::vector<ClassLabel> labels;
  labels.reserve(run.size());
  for (const auto& p : run.pairs()) labels.push_back(p.gold);
  return labels;
}

std::string default_model_id(const std::vector<std::string>& paths,
                             const std::string& fallback) {
  if (paths.empty()) return fallback;
  const auto parent = std::filesystem::path(paths.front()).parent_path().filename();
  return parent.empty() ? fallback : parent.string();
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfiguration: return 2;
    case ErrorKind::kParse:
    case ErrorKind::kIo:
    case ErrorKind::kInvalidInput: return 3;
    case ErrorKind::kInconsistentInput:
    case ErrorKind::kUnsupported:
    case ErrorKind::kUnsupportedScheme: return 4;
    case ErrorKind::kDegenerateDistribution:
    case ErrorKind::kDegenerateVariance: return 5;
  }
  return 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Evaluate multi-class predictions under several class "
               "weighting schemes",
               "wfeval"};
  app.require_subcommand(1);

  ScoringFlags report_flags;
  std::vector<std::string> report_runs;
  std::string report_model;
  auto* report = app.add_subcommand(
      "report", "Per-class scores and one aggregate per weighting scheme");
  report->add_option("runs", report_runs, "Run files (TSV or JSONL)")
      ->required();
  report->add_option("--model-id", report_model, "Model name for the runs");
  report_flags.add_to(*report);

  ScoringFlags compare_flags;
  std::vector<std::string> runs_a;
  std::vector<std::string> runs_b;
  std::string name_a;
  std::string name_b;
  auto* compare = app.add_subcommand(
      "compare", "Welch's t-test and Cohen's d between two models per scheme");
  compare->add_option("-a,--runs-a", runs_a, "Run files of model A")
      ->required();
  compare->add_option("-b,--runs-b", runs_b, "Run files of model B")
      ->required();
  compare->add_option("--name-a", name_a, "Name of model A");
  compare->add_option("--name-b", name_b, "Name of model B");
  compare_flags.add_to(*compare);

  ScoringFlags weight_flags;
  std::vector<std::string> weight_inputs;
  std::string weight_counts;
  auto* weights = app.add_subcommand(
      "weights", "Normalized class weights per scheme, for plotting");
  weights->add_option("inputs", weight_inputs,
                      "Run files or label files whose gold labels are counted");
  weights->add_option("--counts", weight_counts,
                      "Counts file (<label>\\t<count> per line)");
  weights->add_option("--na-label", weight_flags.na_label,
                      "Negative class, left out of the table");
  weights->add_flag("--include-na", weight_flags.include_na,
                    "Keep the negative class as an ordinary class");
  weights->add_flag("--entropy-include-na", weight_flags.entropy_include_na,
                    "Keep negative samples in the entropy class proportions");
  weights->add_option("--schemes", weight_flags.schemes,
                      "Comma-separated schemes (default: weighted, dodrans, "
                      "entropy, macro)")
      ->delimiter(',');
  weight_flags.add_io_flags(*weights);

  ScoringFlags stats_flags;
  std::vector<std::string> stats_inputs;
  std::string split;
  auto* stats = app.add_subcommand(
      "dataset-stats", "Class perplexity, imbalance ratio and % negative");
  stats->add_option("inputs", stats_inputs,
                    "Run files (gold column) or label files, one label per line")
      ->required();
  stats->add_option("--split", split, "Name of the split, e.g. test")
      ->required();
  stats->add_option("--na-label", stats_flags.na_label, "Negative class label");
  stats_flags.add_io_flags(*stats);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("wfeval");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*report) {
      const ReportConfig config = report_flags.config();
      const RenderOptions render = report_flags.render_options();
      const std::string model =
          report_model.empty() ? default_model_id(report_runs, "model") : report_model;
      const auto reports = score_runs(report_runs, model, report_flags, config);
      std::optional<RunSummary> summary;
      if (reports.size() > 1) {
        summary = summarize_runs(reports, config.effective_schemes());
      }
      render_reports(out, reports, summary, config, render);
    } else if (*compare) {
      const ReportConfig config = compare_flags.config();
      const RenderOptions render = compare_flags.render_options();
      const auto a = score_runs(
          runs_a, name_a.empty() ? default_model_id(runs_a, "A") : name_a,
          compare_flags, config);
      const auto b = score_runs(
          runs_b, name_b.empty() ? default_model_id(runs_b, "B") : name_b,
          compare_flags, config);
      const ComparisonReport result =
          build_comparison(a, b, config.effective_schemes());
      for (const auto& w : result.warnings) err << "notice: " << w << '\n';
      render_comparison(out, result, config, render);
    } else if (*weights) {
      const RenderOptions render = weight_flags.render_options();
      std::vector<WeightingScheme> schemes = weight_flags.parsed_schemes();
      if (schemes.empty()) {
        schemes = {WeightingScheme::class_weighted(), WeightingScheme::dodrans(),
                   WeightingScheme::entropy(), WeightingScheme::macro()};
      }
      schemes = canonical_scheme_order(schemes);
      if (schemes.front().kind() == WeightingScheme::Kind::kMicro) {
        if (schemes.size() == 1) {
          throw Error(ErrorKind::kUnsupportedScheme,
                      "micro pools counts and has no class weights");
        }
        err << "notice: micro has no class weights and is left out\n";
      }

      if (weight_inputs.empty() == weight_counts.empty()) {
        throw Error(ErrorKind::kConfiguration,
                    "weights needs either input files or --counts, not both");
      }
      ClassCounts::Map all;
      std::string source;
      if (!weight_counts.empty()) {
        all = load_class_counts(weight_counts).by_class();
        source = weight_counts;
      } else {
        for (const auto& path : weight_inputs) {
          for (auto& l : load_gold_labels(path, weight_flags.run_format())) ++all[l];
          source += (source.empty() ? "" : ", ") + path;
        }
      }
      const auto na = weight_flags.na();
      std::uint64_t na_count = 0;
      if (na && !weight_flags.include_na) {
        if (auto it = all.find(*na); it != all.end()) {
          na_count = it->second;
          all.erase(it);
        }
      }
      if (all.empty()) {
        throw Error(ErrorKind::kInvalidInput, "no positive classes to weight");
      }
      const WeightTable table = build_weight_table(
          ClassCounts(std::move(all)), schemes,
          {weight_flags.entropy_include_na ? na_count : 0});
      for (const auto& w : table.warnings) err << "warning: " << w << '\n';
      render_weight_table(out, table, source, render);
    } else if (*stats) {
      const RenderOptions render = stats_flags.render_options();
      std::vector<ClassLabel> labels;
      for (const auto& path : stats_inputs) {
        auto more = load_gold_labels(path, stats_flags.run_format());
        labels.insert(labels.end(), more.begin(), more.end());
      }
      const auto na = stats_flags.na();
      render_dataset_stats(out, dataset_stats(labels, na), split, na, render);
    }
  } catch (const Error& e) {
    err << "wfeval: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "wfeval: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace wfeval
