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

#include "wfeval/render.h"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

#include "json.hpp"
#include "wfeval/error.h"

namespace wfeval {
namespace {

using Json = nlohmann::ordered_json;

double scaled(double v, const RenderOptions& o) {
  return o.percent ? 100.0 * v : v;
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json optional_scaled(const std::optional<double>& v, const RenderOptions& o) {
  return v ? Json(scaled(*v, o)) : Json(nullptr);
}

std::string full(double v) { return fmt::format("{}", v); }

std::string full(const std::optional<double>& v) {
  return v ? full(*v) : std::string();
}

std::string fixed4(const std::optional<double>& v) {
  return v ? fmt::format("{:.4f}", *v) : std::string("undefined");
}

std::string mean_pm_std(const std::optional<double>& mean,
                        const std::optional<double>& sd,
                        const RenderOptions& o) {
  if (!mean) return "undefined";
  if (!sd) return fmt::format("{:.4f}", scaled(*mean, o));
  return fmt::format("{:.4f} ± {:.4f}", scaled(*mean, o), scaled(*sd, o));
}

Json config_json(const ReportConfig& config, const RenderOptions& o) {
  Json j;
  j["beta"] = config.beta;
  j["na_label"] = config.na_label ? Json(config.na_label->name()) : Json(nullptr);
  j["include_na"] = config.effective_include_na();
  j["entropy_include_na"] = config.entropy_include_na;
  j["weight_source"] = config.weight_source;
  Json schemes = Json::array();
  for (const auto& s : config.effective_schemes()) schemes.push_back(s.name());
  j["schemes"] = std::move(schemes);
  j["percent"] = o.percent;
  return j;
}

Json report_body_json(const ClassificationReport& r, const RenderOptions& o) {
  Json j;
  j["run"] = {{"model_id", r.model_id},
              {"run_id", r.run_id},
              {"n_samples", r.n_samples}};
  Json rows = Json::array();
  for (const auto& row : r.per_class) {
    const ClassScore& s = row.score;
    rows.push_back({{"class", row.label.name()},
                    {"support", s.support},
                    {"tp", s.tp},
                    {"fp", s.fp},
                    {"fn", s.fn},
                    {"precision", scaled(s.precision, o)},
                    {"recall", scaled(s.recall, o)},
                    {"f_beta", scaled(s.f_beta, o)},
                    {"zero_division", s.zero_division},
                    {"weighted", row.weighted}});
  }
  j["per_class"] = std::move(rows);
  Json agg = Json::object();
  Json weights = Json::object();
  for (const auto& a : r.aggregates) {
    agg[a.scheme.name()] = optional_scaled(a.score, o);
    if (a.weights) {
      Json w = Json::object();
      for (const auto& [label, v] : *a.weights) w[label.name()] = v;
      weights[a.scheme.name()] = std::move(w);
    }
  }
  j["aggregates"] = std::move(agg);
  j["weights"] = std::move(weights);
  j["warnings"] = r.warnings;
  return j;
}

Json summary_json(const RunSummary& s, const RenderOptions& o) {
  Json j;
  j["model_id"] = s.model_id;
  j["n_runs"] = s.n_runs;
  Json agg = Json::object();
  for (const auto& ss : s.schemes) {
    Json scores = Json::array();
    for (double v : ss.scores) scores.push_back(scaled(v, o));
    agg[ss.scheme.name()] = {{"mean", optional_scaled(ss.mean, o)},
                             {"std", optional_scaled(ss.stddev, o)},
                             {"scores", std::move(scores)}};
  }
  j["aggregates"] = std::move(agg);
  return j;
}

void write_csv_row(std::ostream& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out << ',';
    out << csv_field(f);
    first = false;
  }
  out << '\n';
}

void render_report_text(std::ostream& out, const ClassificationReport& r,
                        const RenderOptions& o) {
  out << fmt::format("run: {}  model: {}  samples: {}\n", r.run_id,
                     r.model_id.empty() ? "-" : r.model_id, r.n_samples);
  std::size_t width = 5;
  for (const auto& row : r.per_class) {
    width = std::max(width, row.label.name().size());
  }
  out << '\n'
      << fmt::format("{:<{}}  {:>8}  {:>9}  {:>9}  {:>9}\n", "class", width,
                     "support", "precision", "recall", "f_beta");
  bool any_flag = false;
  for (const auto& row : r.per_class) {
    const ClassScore& s = row.score;
    std::string flags;
    if (s.zero_division) flags += " z";
    if (!row.weighted) flags += " u";
    any_flag = any_flag || !flags.empty();
    out << fmt::format("{:<{}}  {:>8}  {:>9.4f}  {:>9.4f}  {:>9.4f}{}\n",
                       row.label.name(), width, s.support,
                       scaled(s.precision, o), scaled(s.recall, o),
                       scaled(s.f_beta, o), flags);
  }
  if (any_flag) out << "(z: zero division, u: unweighted)\n";

  out << '\n' << fmt::format("{:<12}  {:>9}\n", "scheme", "score");
  for (const auto& a : r.aggregates) {
    out << fmt::format("{:<12}  {:>9}\n", a.scheme.name(),
                       fixed4(a.score ? std::optional(scaled(*a.score, o))
                                      : std::nullopt));
  }
  if (!r.warnings.empty()) {
    out << "\nwarnings:\n";
    for (const auto& w : r.warnings) out << "  - " << w << '\n';
  }
}

void render_summary_text(std::ostream& out, const RunSummary& s,
                         const RenderOptions& o) {
  out << fmt::format("summary: model {}, {} runs\n",
                     s.model_id.empty() ? "-" : s.model_id, s.n_runs);
  out << fmt::format("{:<12}  {:>20}\n", "scheme", "mean ± std");
  for (const auto& ss : s.schemes) {
    out << fmt::format("{:<12}  {:>20}\n", ss.scheme.name(),
                       mean_pm_std(ss.mean, ss.stddev, o));
  }
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw Error(ErrorKind::kConfiguration,
              fmt::format("unknown output format '{}' (text, json or csv)", name));
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void render_reports(std::ostream& out,
                    std::span<const ClassificationReport> reports,
                    const std::optional<RunSummary>& summary,
                    const ReportConfig& config, const RenderOptions& o) {
  switch (o.format) {
    case OutputFormat::kJson: {
      Json j;
      j["config"] = config_json(config, o);
      if (reports.size() == 1 && !summary) {
        Json body = report_body_json(reports.front(), o);
        for (auto& [k, v] : body.items()) j[k] = std::move(v);
      } else {
        Json runs = Json::array();
        Json warnings = Json::array();
        for (const auto& r : reports) {
          runs.push_back(report_body_json(r, o));
          for (const auto& w : r.warnings) {
            warnings.push_back(fmt::format("{}: {}", r.run_id, w));
          }
        }
        j["runs"] = std::move(runs);
        if (summary) j["summary"] = summary_json(*summary, o);
        j["warnings"] = std::move(warnings);
      }
      out << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::kCsv: {
      write_csv_row(out, {"run_id", "scope", "name", "metric", "value"});
      for (const auto& r : reports) {
        for (const auto& row : r.per_class) {
          const ClassScore& s = row.score;
          const std::string& c = row.label.name();
          write_csv_row(out, {r.run_id, "class", c, "support", std::to_string(s.support)});
          write_csv_row(out, {r.run_id, "class", c, "tp", std::to_string(s.tp)});
          write_csv_row(out, {r.run_id, "class", c, "fp", std::to_string(s.fp)});
          write_csv_row(out, {r.run_id, "class", c, "fn", std::to_string(s.fn)});
          write_csv_row(out, {r.run_id, "class", c, "precision", full(scaled(s.precision, o))});
          write_csv_row(out, {r.run_id, "class", c, "recall", full(scaled(s.recall, o))});
          write_csv_row(out, {r.run_id, "class", c, "f_beta", full(scaled(s.f_beta, o))});
          write_csv_row(out, {r.run_id, "class", c, "zero_division", s.zero_division ? "1" : "0"});
          write_csv_row(out, {r.run_id, "class", c, "weighted", row.weighted ? "1" : "0"});
        }
        for (const auto& a : r.aggregates) {
          write_csv_row(out, {r.run_id, "aggregate", a.scheme.name(), "score",
                              a.score ? full(scaled(*a.score, o)) : ""});
        }
      }
      if (summary) {
        for (const auto& ss : summary->schemes) {
          const auto m = ss.mean ? std::optional(scaled(*ss.mean, o)) : std::nullopt;
          const auto sd = ss.stddev ? std::optional(scaled(*ss.stddev, o)) : std::nullopt;
          write_csv_row(out, {"", "summary", ss.scheme.name(), "mean", full(m)});
          write_csv_row(out, {"", "summary", ss.scheme.name(), "std", full(sd)});
        }
      }
      return;
    }
    case OutputFormat::kText: {
      out << fmt::format("beta: {}  NA label: {}  include NA: {}  weights: {}\n",
                         config.beta,
                         config.na_label ? config.na_label->name() : "(none)",
                         config.effective_include_na() ? "yes" : "no",
                         config.weight_source);
      if (o.percent) out << "scores are percentages\n";
      for (const auto& r : reports) {
        out << '\n';
        render_report_text(out, r, o);
      }
      if (summary) {
        out << '\n';
        render_summary_text(out, *summary, o);
      }
      return;
    }
  }
}

void render_comparison(std::ostream& out, const ComparisonReport& report,
                       const ReportConfig& config, const RenderOptions& o) {
  switch (o.format) {
    case OutputFormat::kJson: {
      Json j;
      j["config"] = config_json(config, o);
      j["model_a"] = {{"model_id", report.model_a}, {"n_runs", report.runs_a}};
      j["model_b"] = {{"model_id", report.model_b}, {"n_runs", report.runs_b}};
      Json schemes = Json::object();
      for (const auto& s : report.schemes) {
        const auto scores_json = [&](const std::vector<double>& xs) {
          Json a = Json::array();
          for (double v : xs) a.push_back(scaled(v, o));
          return a;
        };
        Json row;
        row["a"] = {{"mean", optional_scaled(s.mean_a, o)},
                    {"std", optional_scaled(s.std_a, o)},
                    {"scores", scores_json(s.scores_a)}};
        row["b"] = {{"mean", optional_scaled(s.mean_b, o)},
                    {"std", optional_scaled(s.std_b, o)},
                    {"scores", scores_json(s.scores_b)}};
        if (s.result) {
          row["t"] = s.result->welch.t;
          row["df"] = s.result->welch.df;
          row["p_value"] = s.result->welch.p_value;
          row["cohens_d"] = optional_number(s.result->cohens_d);
          row["effect"] = s.result->effect
                              ? Json(std::string(effect_size_name(*s.result->effect)))
                              : Json(nullptr);
        } else {
          row["t"] = nullptr;
          row["df"] = nullptr;
          row["p_value"] = nullptr;
          row["cohens_d"] = nullptr;
          row["effect"] = nullptr;
        }
        row["notes"] = s.notes;
        schemes[s.scheme.name()] = std::move(row);
      }
      j["schemes"] = std::move(schemes);
      j["warnings"] = report.warnings;
      out << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::kCsv: {
      write_csv_row(out, {"scheme", "model_a", "mean_a", "std_a", "model_b",
                          "mean_b", "std_b", "t", "df", "p_value", "cohens_d",
                          "effect"});
      for (const auto& s : report.schemes) {
        const auto sc = [&](const std::optional<double>& v) {
          return v ? full(scaled(*v, o)) : std::string();
        };
        const auto* r = s.result ? &*s.result : nullptr;
        write_csv_row(
            out,
            {s.scheme.name(), report.model_a, sc(s.mean_a), sc(s.std_a),
             report.model_b, sc(s.mean_b), sc(s.std_b),
             r ? full(r->welch.t) : "", r ? full(r->welch.df) : "",
             r ? full(r->welch.p_value) : "", r ? full(r->cohens_d) : "",
             r && r->effect ? std::string(effect_size_name(*r->effect)) : ""});
      }
      return;
    }
    case OutputFormat::kText: {
      out << fmt::format("A: {} ({} runs)   B: {} ({} runs)\n", report.model_a,
                         report.runs_a, report.model_b, report.runs_b);
      out << fmt::format("beta: {}  NA label: {}  include NA: {}  weights: {}\n",
                         config.beta,
                         config.na_label ? config.na_label->name() : "(none)",
                         config.effective_include_na() ? "yes" : "no",
                         config.weight_source);
      if (o.percent) out << "scores are percentages\n";
      out << '\n'
          << fmt::format("{:<10}  {:>20}  {:>20}  {:>9}  {:>8}  {:>11}  {:>9}  {}\n",
                         "scheme", "A mean ± std", "B mean ± std", "t", "df",
                         "p-value", "cohen_d", "effect");
      for (const auto& s : report.schemes) {
        std::string t = "-", df = "-", p = "-", d = "-", effect = "-";
        if (s.result) {
          t = fmt::format("{:.4f}", s.result->welch.t);
          df = fmt::format("{:.4f}", s.result->welch.df);
          p = fmt::format("{:.4e}", s.result->welch.p_value);
          if (s.result->cohens_d) {
            d = fmt::format("{:.4f}", *s.result->cohens_d);
            effect = std::string(effect_size_name(*s.result->effect));
          }
        }
        out << fmt::format("{:<10}  {:>20}  {:>20}  {:>9}  {:>8}  {:>11}  {:>9}  {}\n",
                           s.scheme.name(), mean_pm_std(s.mean_a, s.std_a, o),
                           mean_pm_std(s.mean_b, s.std_b, o), t, df, p, d,
                           effect);
      }
      std::vector<std::string> notes = report.warnings;
      for (const auto& s : report.schemes) {
        for (const auto& n : s.notes) {
          notes.push_back(fmt::format("{}: {}", s.scheme.name(), n));
        }
      }
      if (!notes.empty()) {
        out << "\nnotes:\n";
        for (const auto& n : notes) out << "  - " << n << '\n';
      }
      return;
    }
  }
}

void render_weight_table(std::ostream& out, const WeightTable& table,
                         const std::string& count_source,
                         const RenderOptions& o) {
  switch (o.format) {
    case OutputFormat::kJson: {
      Json j;
      j["count_source"] = count_source;
      Json schemes = Json::array();
      for (const auto& c : table.columns) schemes.push_back(c.scheme.name());
      j["schemes"] = std::move(schemes);
      Json classes = Json::array();
      for (const auto& label : table.order) {
        Json w = Json::object();
        for (const auto& c : table.columns) w[c.scheme.name()] = c.weights.at(label);
        classes.push_back({{"class", label.name()},
                           {"count", table.counts.at(label)},
                           {"weights", std::move(w)}});
      }
      j["classes"] = std::move(classes);
      Json desiderata = Json::object();
      for (const auto& c : table.columns) {
        const auto check = [](const DesideratumCheck& d) {
          Json witnesses = Json::array();
          for (const auto& [i, k] : d.witnesses) {
            witnesses.push_back({i.name(), k.name()});
          }
          return Json{{"passed", d.passed}, {"witnesses", std::move(witnesses)}};
        };
        desiderata[c.scheme.name()] = {{"weight_sum", c.desiderata.weight_sum},
                                       {"D0", check(c.desiderata.d0)},
                                       {"D1", check(c.desiderata.d1)},
                                       {"D2", check(c.desiderata.d2)}};
      }
      j["desiderata"] = std::move(desiderata);
      j["warnings"] = table.warnings;
      out << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::kCsv: {
      std::vector<std::string> header{"class", "count"};
      for (const auto& c : table.columns) header.push_back(c.scheme.name());
      const auto write = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (i) out << ',';
          out << csv_field(fields[i]);
        }
        out << '\n';
      };
      write(header);
      for (const auto& label : table.order) {
        std::vector<std::string> row{label.name(),
                                     std::to_string(table.counts.at(label))};
        for (const auto& c : table.columns) row.push_back(full(c.weights.at(label)));
        write(row);
      }
      return;
    }
    case OutputFormat::kText: {
      out << "counts from: " << count_source << "\n\n";
      std::size_t width = 5;
      for (const auto& l : table.order) width = std::max(width, l.name().size());
      out << fmt::format("{:<{}}  {:>10}", "class", width, "count");
      for (const auto& c : table.columns) out << fmt::format("  {:>10}", c.scheme.name());
      out << '\n';
      for (const auto& label : table.order) {
        out << fmt::format("{:<{}}  {:>10}", label.name(), width,
                           table.counts.at(label));
        for (const auto& c : table.columns) {
          out << fmt::format("  {:>10.4f}", c.weights.at(label));
        }
        out << '\n';
      }
      out << '\n' << fmt::format("{:<12}  {:>9}  D0    D1    D2\n", "desiderata", "sum w");
      for (const auto& c : table.columns) {
        const auto mark = [](const DesideratumCheck& d) { return d.passed ? "pass" : "FAIL"; };
        out << fmt::format("{:<12}  {:>9.6f}  {:<4}  {:<4}  {:<4}\n", c.scheme.name(),
                           c.desiderata.weight_sum, mark(c.desiderata.d0),
                           mark(c.desiderata.d1), mark(c.desiderata.d2));
        for (const auto& [name, d] :
             {std::pair{"D1", &c.desiderata.d1}, std::pair{"D2", &c.desiderata.d2}}) {
          if (d->witnesses.empty()) continue;
          out << fmt::format("  {} witness: n({}) >= n({})\n", name,
                             d->witnesses.front().first.name(),
                             d->witnesses.front().second.name());
        }
      }
      if (!table.warnings.empty()) {
        out << "\nwarnings:\n";
        for (const auto& w : table.warnings) out << "  - " << w << '\n';
      }
      return;
    }
  }
}

void render_dataset_stats(std::ostream& out, const DatasetStats& s,
                          const std::string& split,
                          const std::optional<ClassLabel>& na_label,
                          const RenderOptions& o) {
  switch (o.format) {
    case OutputFormat::kJson: {
      Json j;
      j["split"] = split;
      j["na_label"] = na_label ? Json(na_label->name()) : Json(nullptr);
      j["n_classes"] = s.n_classes;
      j["n_samples"] = s.n_samples;
      j["pct_na"] = s.pct_na;
      j["perplexity_with_na"] = s.perplexity_with_na;
      j["perplexity_without_na"] = optional_number(s.perplexity_without_na);
      j["ratio"] = optional_number(s.ratio);
      out << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::kCsv: {
      const auto or_undefined = [](const std::optional<double>& v) {
        return v ? full(*v) : std::string("undefined");
      };
      write_csv_row(out, {"split", "na_label", "n_classes", "n_samples", "pct_na",
                          "perplexity_with_na", "perplexity_without_na", "ratio"});
      write_csv_row(out, {split, na_label ? na_label->name() : "",
                          std::to_string(s.n_classes), std::to_string(s.n_samples),
                          full(s.pct_na), full(s.perplexity_with_na),
                          or_undefined(s.perplexity_without_na), or_undefined(s.ratio)});
      return;
    }
    case OutputFormat::kText: {
      out << fmt::format("split: {}  NA label: {}\n\n", split,
                         na_label ? na_label->name() : "(none)");
      out << fmt::format("{:<22}{}\n", "classes", s.n_classes);
      out << fmt::format("{:<22}{}\n", "samples", s.n_samples);
      out << fmt::format("{:<22}{:.1f}\n", "% NA", s.pct_na);
      out << fmt::format("{:<22}{:.4f}\n", "perplexity w NA", s.perplexity_with_na);
      out << fmt::format("{:<22}{}\n", "perplexity w/o NA", fixed4(s.perplexity_without_na));
      out << fmt::format("{:<22}{}\n", "ratio", fixed4(s.ratio));
      return;
    }
  }
}

}  // namespace wfeval
