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

#include "uniqsub/bounds.h"

#include <cmath>

#include "uniqsub/errors.h"

namespace uniqsub {

namespace {

Rational Power(const Rational& base, std::int64_t exponent) {
  Rational result = 1;
  Rational square = base;
  for (std::int64_t e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= square;
    square *= square;
  }
  return result;
}

}  // namespace

Rational BinomialPointMassExact(std::int64_t pair_count) {
  if (pair_count < 1) throw DomainError("N must be at least 1");
  return Rational(Binomial(pair_count, pair_count / 2),
                  PowerOfTwo(static_cast<unsigned>(pair_count)));
}

BoundReport BinomialPointMassMax(std::int64_t pair_count) {
  const Rational exact = BinomialPointMassExact(pair_count);
  BoundReport report;
  report.name = "binomial-point-mass";
  report.inputs = {{"N", std::to_string(pair_count)}};
  report.exact = ToHighFloat(exact);
  report.bound = 1 / sqrt(HighFloat(pair_count));
  report.slack = report.bound - *report.exact;
  // exact <= 1/sqrt(N)  <=>  exact^2 N <= 1.
  report.holds = exact * exact * pair_count <= 1;
  return report;
}

Rational BinomialTwoSidedTail(std::int64_t pair_count, const Rational& t) {
  if (pair_count < 0) throw DomainError("N must be non-negative");
  BigInt favourable = 0;
  for (std::int64_t k = 0; k <= pair_count; ++k) {
    const Rational deviation = abs(Rational(2 * k - pair_count, 2));
    if (deviation >= t) favourable += Binomial(pair_count, k);
  }
  return Rational(favourable, PowerOfTwo(static_cast<unsigned>(pair_count)));
}

ChernoffResult ChernoffL(double delta, int n) {
  if (!(delta > 0 && delta < 1)) throw DomainError("delta must lie in (0, 1)");
  if (n < 2) throw DomainError("n must be at least 2");
  const std::int64_t pair_count = std::int64_t{n} * (n - 1) / 2;
  ChernoffResult result;
  result.n = n;
  result.target = RationalFromDouble(delta) / 4;
  Rational previous = BinomialTwoSidedTail(pair_count, 0);
  for (int L = 1;; ++L) {
    const Rational tail = BinomialTwoSidedTail(pair_count, Rational(L) * n);
    if (tail <= result.target) {
      result.L = L;
      result.tail = tail;
      result.tail_below = previous;
      return result;
    }
    previous = tail;
  }
}

HighFloat AzumaTailFromSumSquares(double t, const HighFloat& sum_b_squared) {
  if (!(t >= 0)) throw DomainError("t must be non-negative");
  if (sum_b_squared < 0) throw DomainError("sum of b_i^2 must be non-negative");
  if (t == 0) return 1;
  if (sum_b_squared == 0) return 0;
  const HighFloat tt(t);
  const HighFloat value = exp(-2 * tt * tt / sum_b_squared);
  return value > 1 ? HighFloat(1) : value;
}

HighFloat AzumaTail(double t, const std::vector<double>& b) {
  HighFloat sum = 0;
  for (double bi : b) {
    if (!(bi >= 0) || !std::isfinite(bi)) throw DomainError("b_i must be finite and >= 0");
    sum += HighFloat(bi) * HighFloat(bi);
  }
  return AzumaTailFromSumSquares(t, sum);
}

Rational ExpectedEmbeddings(int n, std::int64_t e_h) {
  if (n < 1) throw DomainError("n must be at least 1");
  const std::int64_t pair_count = std::int64_t{n} * (n - 1) / 2;
  if (e_h < 0 || e_h > pair_count) throw DomainError("need 0 <= e(H) <= N");
  return Rational(Factorial(static_cast<unsigned>(n)),
                  PowerOfTwo(static_cast<unsigned>(pair_count - e_h)));
}

DensityDecay DensityDecayBound(std::int64_t e_h, std::int64_t pair_count,
                               std::int64_t steps, std::int64_t m_star) {
  if (pair_count < 1) throw DomainError("N must be at least 1");
  if (e_h < 0 || e_h > pair_count) throw DomainError("need 0 <= e(H) <= N");
  if (steps < 0) throw DomainError("steps must be non-negative");
  if (m_star < 0 || m_star > e_h) throw DomainError("need 0 <= m* <= e(H)");
  if (steps > 0 && m_star == pair_count) throw DomainError("need m* < N when steps > 0");
  DensityDecay decay;
  decay.crude = Power(Rational(e_h, pair_count), steps);
  decay.sharp = steps == 0 ? Rational(1)
                           : Power(Rational(e_h - m_star, pair_count - m_star), steps);
  return decay;
}

Rational UnionBudgetNatural(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  return Rational(Factorial(static_cast<unsigned>(n)), pow(BigInt(n), n));
}

HighFloat UnionBudget(int n, std::optional<double> base) {
  if (!base) return ToHighFloat(UnionBudgetNatural(n));
  if (n < 1) throw DomainError("n must be at least 1");
  if (!(*base > 1) || !std::isfinite(*base)) throw DomainError("log base must exceed 1");
  const HighFloat factorial(Factorial(static_cast<unsigned>(n)));
  const HighFloat nn(n);
  return factorial * exp(-nn * log(nn) / log(HighFloat(*base)));
}

DenseReduction DenseReductionInequality(double c, double delta, int n, int L) {
  if (!(c > 0)) throw DomainError("C must be positive");
  if (!(delta > 0 && delta < 1)) throw DomainError("delta must lie in (0, 1)");
  if (n < 2) throw DomainError("n must be at least 2");
  if (L < 1) throw DomainError("L must be at least 1");
  const HighFloat pair_count(std::int64_t{n} * (n - 1) / 2);
  const HighFloat nn(n);
  DenseReduction result;
  result.lhs = exp(-HighFloat(c) * nn * nn * HighFloat(delta) / (17 * pair_count));
  result.rhs = HighFloat(delta) / (48 * HighFloat(L));
  result.holds = result.lhs < result.rhs;
  return result;
}

}  // namespace uniqsub
