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

#include "tanglekit/error.hpp"

namespace tanglekit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformed: return "Malformed";
    case ErrorKind::kValidation: return "ValidationFailed";
    case ErrorKind::kBound: return "BoundExceeded";
    case ErrorKind::kPrecondition: return "PreconditionFailed";
    case ErrorKind::kNonInjectiveOrder: return "NonInjectiveOrder";
    case ErrorKind::kNotStandard: return "NotStandard";
    case ErrorKind::kNotRich: return "NotRich";
    case ErrorKind::kTrivialElementsPresent: return "TrivialElementsPresent";
    case ErrorKind::kNotIrreducible: return "NotIrreducible";
    case ErrorKind::kNonStarFamily: return "NonStarFamily";
    case ErrorKind::kAmbiguity: return "Ambiguity";
    case ErrorKind::kRichnessViolation: return "RichnessViolation";
    case ErrorKind::kReductionStuck: return "ReductionStuck";
    case ErrorKind::kTheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformed:
    case ErrorKind::kValidation:
      return 1;
    case ErrorKind::kRichnessViolation:
    case ErrorKind::kReductionStuck:
    case ErrorKind::kTheoremViolation:
      return 3;
    default:
      return 2;
  }
}

}  // namespace tanglekit
