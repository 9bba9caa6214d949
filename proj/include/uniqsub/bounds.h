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

// Evaluators for closed-form probability bounds. Closed forms are exact
// rationals; everything else is HighFloat (50 digits).

#ifndef UNIQSUB_BOUNDS_H_
#define UNIQSUB_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uniqsub/numeric.h"

namespace uniqsub {

// A bound checked against the quantity it bounds.
struct BoundReport {
  std::string name;
  // Named inputs in the order given, already formatted.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<HighFloat> exact;
  HighFloat bound;
  // bound - exact, when exact is known.
  std::optional<HighFloat> slack;
  // exact <= bound, decided exactly where both sides allow it.
  bool holds = true;
};

// max_t Pr[Bin(N, 1/2) = t] = C(N, floor(N/2)) / 2^N against 1/sqrt(N).
// Requires N >= 1.
BoundReport BinomialPointMassMax(std::int64_t pair_count);
Rational BinomialPointMassExact(std::int64_t pair_count);

// Pr[|Bin(N, 1/2) - N/2| >= t], exactly.
Rational BinomialTwoSidedTail(std::int64_t pair_count, const Rational& t);

struct ChernoffResult {
  int n = 0;
  Rational target;  // delta / 4
  int L = 0;
  // Tail Pr[|e(G) - N/2| >= L n] at L and at L - 1.
  Rational tail;
  Rational tail_below;
};

// Smallest integer L >= 0 with Pr[|e(G) - N/2| >= L n] <= delta / 4 for
// G ~ G(n, 1/2), N = n(n-1)/2. Requires 0 < delta < 1 and n >= 2. The tail
// at L = 0 is 1, so the answer is always at least 1.
ChernoffResult ChernoffL(double delta, int n);

// exp(-2 t^2 / sum b_i^2), at most 1. With sum b_i^2 = 0 the deviating
// function is constant: the tail is 0 for t > 0 and 1 for t = 0. Requires
// t >= 0 and b_i >= 0.
HighFloat AzumaTail(double t, const std::vector<double>& b);
HighFloat AzumaTailFromSumSquares(double t, const HighFloat& sum_b_squared);

// Mean number of embeddings of G ~ G(n, 1/2) into a host with e_h edges:
// n! 2^(e_h - N). Requires 0 <= e_h <= N.
Rational ExpectedEmbeddings(int n, std::int64_t e_h);

struct DensityDecay {
  // (e_h / N)^steps
  Rational crude;
  // ((e_h - m*) / (N - m*))^steps
  Rational sharp;
};

// Requires 0 <= m* <= e_h <= N, N >= 1, steps >= 0 and, when steps > 0,
// m* < N.
DensityDecay DensityDecayBound(std::int64_t e_h, std::int64_t pair_count,
                               std::int64_t steps, std::int64_t m_star = 0);

// n! * exp(-n log n), log to the given base (natural when absent). For the
// natural log the value is exactly n!/n^n.
HighFloat UnionBudget(int n, std::optional<double> base = std::nullopt);
Rational UnionBudgetNatural(int n);

struct DenseReduction {
  HighFloat lhs;  // exp(-C n^2 delta / (17 N))
  HighFloat rhs;  // delta / (48 L)
  bool holds = false;
};

// Checks exp(-C n^2 delta / (17 N)) < delta / (48 L) for a caller-chosen C.
// Requires C > 0, 0 < delta < 1, n >= 2, L >= 1.
DenseReduction DenseReductionInequality(double c, double delta, int n, int L);

}  // namespace uniqsub

#endif  // UNIQSUB_BOUNDS_H_
