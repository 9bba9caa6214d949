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

#ifndef UNIQSUB_NUMERIC_H_
#define UNIQSUB_NUMERIC_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace uniqsub {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 50 significant decimal digits; used wherever a bound has no closed rational
// form (square roots, exponentials).
using HighFloat = boost::multiprecision::cpp_dec_float_50;

BigInt Factorial(unsigned n);
BigInt Binomial(std::int64_t n, std::int64_t k);
BigInt FallingFactorial(std::int64_t n, std::int64_t k);
BigInt PowerOfTwo(unsigned exponent);

// Exact value of a finite double.
Rational RationalFromDouble(double value);

HighFloat ToHighFloat(const Rational& value);
double ToDouble(const Rational& value);

// "p/q", or "p" when the denominator is one.
std::string ToString(const Rational& value);
std::string ToString(const BigInt& value);
// Fixed notation with the given number of significant digits.
std::string ToString(const HighFloat& value, int digits = 30);

}  // namespace uniqsub

#endif  // UNIQSUB_NUMERIC_H_
