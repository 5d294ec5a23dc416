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

// Prediction files.
//
//   TSV    <gold>\t<pred>\n per sample, no header
//   JSONL  {"gold": "...", "pred": "..."}\n per sample
//
// Labels are UTF-8 and compared byte-wise. Both LF and CRLF line endings
// are accepted.

#ifndef WFEVAL_IO_H_
#define WFEVAL_IO_H_

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wfeval/metrics.h"
#include "wfeval/stattest.h"
#include "wfeval/weighting.h"

namespace wfeval {

enum class RunFormat { kTsv, kJsonl };

std::string_view run_format_name(RunFormat format);
// "tsv" or "jsonl"; Error(kConfiguration) otherwise.
RunFormat parse_run_format(std::string_view name);
// From the extension: .tsv/.tab are TSV, .jsonl/.ndjson are JSONL.
// Error(kConfiguration) for anything else.
RunFormat infer_run_format(const std::filesystem::path& path);

struct RunFileDescriptor {
  std::filesystem::path path;
  std::optional<RunFormat> format;  // inferred from the extension if empty
  std::string model_id;
  std::string run_id;  // defaults to the file stem

  RunFormat resolved_format() const {
    return format ? *format : infer_run_format(path);
  }
};

bool is_valid_utf8(std::string_view text);

// `source` names the input in error messages.
EvaluationRun parse_run(std::istream& in, RunFormat format,
                        const std::optional<ClassLabel>& na_label,
                        std::string model_id, std::string run_id,
                        std::string_view source = "<input>");

// Error(kIo) if the file cannot be read, Error(kParse) naming the line for
// malformed content, including an empty file.
EvaluationRun load_run(const RunFileDescriptor& desc,
                       const std::optional<ClassLabel>& na_label = std::nullopt);

void write_run(std::ostream& out, const EvaluationRun& run, RunFormat format);

using ScoreExtractor = std::function<double(const EvaluationRun&)>;

// One score per file, in input order. Needs at least two files sharing one
// model id.
RunGroup load_run_group(std::span<const RunFileDescriptor> descs,
                        const ScoreExtractor& score,
                        const std::optional<ClassLabel>& na_label = std::nullopt);

// One label per line.
std::vector<ClassLabel> load_label_list(const std::filesystem::path& path);

// `<label>\t<count>` per line, counts positive integers.
ClassCounts load_class_counts(const std::filesystem::path& path);

}  // namespace wfeval

#endif  // WFEVAL_IO_H_
