// Copyright 2026 The uniqsub Authors
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

#include "uniqsub/numeric.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace uniqsub {

BigInt Factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt Binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt FallingFactorial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (k > n) return 0;
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) result *= n - i;
  return result;
}

BigInt PowerOfTwo(unsigned exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

Rational RationalFromDouble(double value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("non-finite value has no rational form");
  }
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // 53 bits of mantissa are exact in a double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt numerator = scaled;
  if (exponent >= 0) {
    numerator <<= exponent;
    return Rational(numerator);
  }
  return Rational(numerator, PowerOfTwo(static_cast<unsigned>(-exponent)));
}

HighFloat ToHighFloat(const Rational& value) {
  return HighFloat(numerator(value)) / HighFloat(denominator(value));
}

double ToDouble(const Rational& value) {
  return ToHighFloat(value).convert_to<double>();
}

std::string ToString(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string ToString(const BigInt& value) { return value.str(); }

std::string ToString(const HighFloat& value, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << value;
  return out.str();
}

}  // namespace uniqsub
