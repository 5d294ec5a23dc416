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

#ifndef WFEVAL_ERROR_H_
#define WFEVAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wfeval {

// Failure categories raised by the library. The CLI maps each one to an
// exit code.
enum class ErrorKind {
  kConfiguration,           // invalid beta, missing NA label, bad option
  kUnsupportedScheme,       // e.g. asking micro for a weight vector
  kDegenerateDistribution,  // entropy weights over a single class
  kInconsistentInput,       // mismatched class sets, missing scores
  kDegenerateVariance,      // both run groups have zero variance
  kUnsupported,             // operation not defined for these inputs
  kInvalidInput,            // domain type invariant violated
  kParse,                   // malformed input file
  kIo,                      // file could not be opened or read
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wfeval

#endif  // WFEVAL_ERROR_H_
