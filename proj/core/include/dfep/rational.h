// Copyright 2026 The DFEP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic used for probabilities and every cost functional.

#ifndef DFEP_RATIONAL_H_
#define DFEP_RATIONAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dfep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "a/b", "a" or "-a/b". Returns nullopt on malformed text or b == 0.
std::optional<Rational> ParseRational(std::string_view text);

// Canonical text form: "a" when the denominator is 1, otherwise "a/b" in
// lowest terms.
std::string FormatRational(const Rational& value);

// Decimal rendering with `significant` significant digits. Display only.
std::string FormatDecimal(const Rational& value, int significant = 6);

double ToDouble(const Rational& value);

inline Rational MakeRational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// Ratio a/b with the convention 0/0 = 1. Requires b > 0 or a == b == 0.
Rational RatioOrOne(const Rational& a, const Rational& b);

}  // namespace dfep

#endif  // DFEP_RATIONAL_H_
