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

#ifndef TANGLEKIT_RATIONAL_HPP_
#define TANGLEKIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tanglekit {

// Orders are exact; strict inequalities between orders carry meaning
// throughout, so no floating point is used anywhere.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "-p", "p/q" and decimal literals such as "1.25".
// Throws Error(kMalformed) on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q" form.
std::string to_string(const Rational& value);

}  // namespace tanglekit

#endif  // TANGLEKIT_RATIONAL_HPP_
