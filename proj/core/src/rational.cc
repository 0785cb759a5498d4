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

#include "dfep/rational.h"

#include <cctype>
#include <cstdio>

#include "dfep/error.h"

namespace dfep {

namespace {

std::optional<BigInt> ParseInteger(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  BigInt value = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kEmptySequence: return "EmptySequence";
    case ErrorCode::kSeparabilityUnreachable: return "SeparabilityUnreachable";
    case ErrorCode::kInfeasibleCover: return "InfeasibleCover";
    case ErrorCode::kTreeMismatch: return "TreeMismatch";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

void ThrowInternal(const std::string& what) {
  throw Error(ErrorCode::kInternal, "internal invariant violated: " + what);
}

std::optional<Rational> ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto num = ParseInteger(text);
    if (!num) return std::nullopt;
    return Rational(*num);
  }
  auto num = ParseInteger(text.substr(0, slash));
  auto den = ParseInteger(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

std::string FormatRational(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

std::string FormatDecimal(const Rational& value, int significant) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant, ToDouble(value));
  return buffer;
}

Rational RatioOrOne(const Rational& a, const Rational& b) {
  if (b == 0) {
    DFEP_CHECK(a == 0, "ratio with zero denominator");
    return Rational(1);
  }
  return a / b;
}

}  // namespace dfep
