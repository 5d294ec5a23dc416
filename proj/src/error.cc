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

#include "wfeval/error.h"

namespace wfeval {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfiguration: return "configuration error";
    case ErrorKind::kUnsupportedScheme: return "unsupported scheme";
    case ErrorKind::kDegenerateDistribution: return "degenerate distribution";
    case ErrorKind::kInconsistentInput: return "inconsistent input";
    case ErrorKind::kDegenerateVariance: return "degenerate variance";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kInvalidInput: return "invalid input";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kIo: return "i/o error";
  }
  return "error";
}

}  // namespace wfeval
