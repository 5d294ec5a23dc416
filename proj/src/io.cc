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

#include "wfeval/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <utility>

#include <fmt/format.h>

#include "json.hpp"
#include "wfeval/error.h"

namespace wfeval {
namespace {

[[noreturn]] void parse_error(std::string_view source, std::size_t line,
                              std::string_view what) {
  throw Error(ErrorKind::kParse,
              fmt::format("{}:{}: {}", source, line, what));
}

// Calls `fn(line_number, line)` for every line with the trailing CR removed.
template <typename Fn>
std::size_t for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    fn(number, line);
  }
  return number;
}

ClassLabel make_label(std::string_view text, std::string_view source,
                      std::size_t line, std::string_view field) {
  if (text.empty()) parse_error(source, line, fmt::format("empty {} label", field));
  if (!is_valid_utf8(text)) {
    parse_error(source, line, fmt::format("{} label is not valid UTF-8", field));
  }
  return ClassLabel(std::string(text));
}

LabeledPair parse_tsv_line(std::string_view line, std::string_view source,
                           std::size_t number) {
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos) {
    parse_error(source, number, "expected two tab-separated columns");
  }
  if (line.find('\t', tab + 1) != std::string_view::npos) {
    parse_error(source, number, "more than two tab-separated columns");
  }
  return {make_label(line.substr(0, tab), source, number, "gold"),
          make_label(line.substr(tab + 1), source, number, "predicted")};
}

LabeledPair parse_jsonl_line(std::string_view line, std::string_view source,
                             std::size_t number) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(source, number, fmt::format("invalid JSON ({})", e.what()));
  }
  if (!obj.is_object()) parse_error(source, number, "expected a JSON object");
  const auto field = [&](const char* key) -> std::string {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
      parse_error(source, number, fmt::format("missing string field \"{}\"", key));
    }
    return it->get<std::string>();
  };
  return {make_label(field("gold"), source, number, "gold"),
          make_label(field("pred"), source, number, "predicted")};
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, fmt::format("cannot open {}", path.string()));
  }
  return in;
}

}  // namespace

std::string_view run_format_name(RunFormat format) {
  return format == RunFormat::kTsv ? "tsv" : "jsonl";
}

RunFormat parse_run_format(std::string_view name) {
  if (name == "tsv") return RunFormat::kTsv;
  if (name == "jsonl") return RunFormat::kJsonl;
  throw Error(ErrorKind::kConfiguration,
              fmt::format("unknown run file format '{}' (tsv or jsonl)", name));
}

RunFormat infer_run_format(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".tsv" || ext == ".tab") return RunFormat::kTsv;
  if (ext == ".jsonl" || ext == ".ndjson") return RunFormat::kJsonl;
  throw Error(ErrorKind::kConfiguration,
              fmt::format("cannot infer the format of {} from its extension; "
                          "pass the format explicitly",
                          path.string()));
}

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2, cp = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3, cp = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4, cp = b0 & 0x07, min = 0x10000;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += len;
  }
  return true;
}

EvaluationRun parse_run(std::istream& in, RunFormat format,
                        const std::optional<ClassLabel>& na_label,
                        std::string model_id, std::string run_id,
                        std::string_view source) {
  std::vector<LabeledPair> pairs;
  for_each_line(in, [&](std::size_t number, std::string_view line) {
    if (line.empty()) parse_error(source, number, "empty line");
    pairs.push_back(format == RunFormat::kTsv
                        ? parse_tsv_line(line, source, number)
                        : parse_jsonl_line(line, source, number));
  });
  if (in.bad()) {
    throw Error(ErrorKind::kIo, fmt::format("read error in {}", source));
  }
  if (pairs.empty()) {
    throw Error(ErrorKind::kParse, fmt::format("{}: no samples", source));
  }
  return EvaluationRun(std::move(pairs), na_label, std::move(model_id),
                       std::move(run_id));
}

EvaluationRun load_run(const RunFileDescriptor& desc,
                       const std::optional<ClassLabel>& na_label) {
  const RunFormat format = desc.resolved_format();
  std::ifstream in = open_input(desc.path);
  std::string run_id =
      desc.run_id.empty() ? desc.path.stem().string() : desc.run_id;
  return parse_run(in, format, na_label, desc.model_id, std::move(run_id),
                   desc.path.string());
}

void write_run(std::ostream& out, const EvaluationRun& run, RunFormat format) {
  for (const auto& p : run.pairs()) {
    if (format == RunFormat::kTsv) {
      out << p.gold.name() << '\t' << p.predicted.name() << '\n';
    } else {
      out << "{\"gold\": " << nlohmann::json(p.gold.name()).dump()
          << ", \"pred\": " << nlohmann::json(p.predicted.name()).dump()
          << "}\n";
    }
  }
}

RunGroup load_run_group(std::span<const RunFileDescriptor> descs,
                        const ScoreExtractor& score,
                        const std::optional<ClassLabel>& na_label) {
  if (descs.size() < 2) {
    throw Error(ErrorKind::kInvalidInput,
                fmt::format("a run group needs at least 2 run files, got {}",
                            descs.size()));
  }
  const std::string& model_id = descs.front().model_id;
  std::vector<double> scores;
  scores.reserve(descs.size());
  for (const auto& d : descs) {
    if (d.model_id != model_id) {
      throw Error(ErrorKind::kInconsistentInput,
                  fmt::format("run {} belongs to model '{}', expected '{}'",
                              d.path.string(), d.model_id, model_id));
    }
    scores.push_back(score(load_run(d, na_label)));
  }
  return RunGroup(model_id, std::move(scores));
}

std::vector<ClassLabel> load_label_list(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  const std::string source = path.string();
  std::vector<ClassLabel> labels;
  for_each_line(in, [&](std::size_t number, std::string_view line) {
    labels.push_back(make_label(line, source, number, "class"));
  });
  if (labels.empty()) {
    throw Error(ErrorKind::kParse, fmt::format("{}: no labels", source));
  }
  return labels;
}

ClassCounts load_class_counts(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  const std::string source = path.string();
  ClassCounts::Map counts;
  for_each_line(in, [&](std::size_t number, std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      parse_error(source, number, "expected <label>\\t<count>");
    }
    ClassLabel label = make_label(line.substr(0, tab), source, number, "class");
    const std::string_view digits = line.substr(tab + 1);
    std::uint64_t n = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || end != digits.data() + digits.size() || n == 0) {
      parse_error(source, number, "count must be a positive integer");
    }
    if (!counts.emplace(std::move(label), n).second) {
      parse_error(source, number, "duplicate class");
    }
  });
  if (counts.empty()) {
    throw Error(ErrorKind::kParse, fmt::format("{}: no counts", source));
  }
  return ClassCounts(std::move(counts));
}

}  // namespace wfeval
