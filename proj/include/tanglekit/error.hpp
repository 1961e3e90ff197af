// Copyright 2026 The tanglekit Authors
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

#ifndef TANGLEKIT_ERROR_HPP_
#define TANGLEKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tanglekit/oriented_set.hpp"

namespace tanglekit {

enum class ErrorKind {
  kMalformed,        // unparseable input or schema mismatch
  kValidation,       // an axiom of the input structure fails
  kBound,            // desk-scale bound exceeded
  kPrecondition,     // generic precondition of an operation
  kNonInjectiveOrder,
  kNotStandard,
  kNotRich,
  kTrivialElementsPresent,
  kNotIrreducible,
  kNonStarFamily,
  kAmbiguity,
  kRichnessViolation,
  kReductionStuck,
  kTheoremViolation,
};

std::string_view to_string(ErrorKind kind);

// Process exit code used by the command line front end for each kind:
// 1 malformed input, 2 precondition/hypothesis failure, 3 theorem violation.
int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<OrientedSet> witnesses = {})
      : std::runtime_error(message),
        kind_(kind),
        witnesses_(std::move(witnesses)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<OrientedSet>& witnesses() const noexcept {
    return witnesses_;
  }

 private:
  ErrorKind kind_;
  std::vector<OrientedSet> witnesses_;
};

}  // namespace tanglekit

#endif  // TANGLEKIT_ERROR_HPP_
