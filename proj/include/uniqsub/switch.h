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

// Switches: for a bijection pi from V(Hc) onto V(G), a pair {u, v} of
// G-vertices whose preimages a = pi^-1(u), b = pi^-1(v) can trade places.
// The pair is a switch when
//   v is adjacent in G to pi(x) for every x in N(a) \ N(b) \ {b}, and
//   u is adjacent in G to pi(y) for every y in N(b) \ N(a) \ {a},
// neighbourhoods taken in Hc. Excluding b (resp. a) matters only when a and b
// are adjacent in Hc: the literal difference would then ask v to be adjacent
// to itself, although exchanging a and b still preserves the edge ab. With
// this reading, swapping a switch of an embedding always gives an embedding.

#ifndef UNIQSUB_SWITCH_H_
#define UNIQSUB_SWITCH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uniqsub/graph.h"
#include "uniqsub/numeric.h"

namespace uniqsub {

using VertexPair = std::pair<int, int>;

class SwitchContext {
 public:
  // Throws DomainError unless pi is a bijection V(hc) -> V(g).
  SwitchContext(Graph hc, Graph g, VertexMap pi);

  const Graph& hc() const { return hc_; }
  const Graph& g() const { return g_; }
  const VertexMap& pi() const { return pi_; }
  int order() const { return hc_.order(); }
  bool PiIsEmbedding() const;

 private:
  Graph hc_;
  Graph g_;
  VertexMap pi_;
};

// G-vertices that v (resp. u) must be adjacent to for {u, v} to be a switch.
struct SwitchRequirements {
  VertexSet at_v = 0;
  VertexSet at_u = 0;

  int size() const { return PopCount(at_v) + PopCount(at_u); }
};

// Requires u != v (DomainError).
SwitchRequirements RequiredNeighbours(const Graph& hc, const VertexMap& pi, int u,
                                      int v);

bool IsPiSwitch(const SwitchContext& ctx, int u, int v);

// The map with the roles of u and v exchanged. Throws DomainError naming the
// violated precondition when {u, v} is not a switch or pi is not an
// embedding of Hc into G.
VertexMap ApplySwitch(const SwitchContext& ctx, int u, int v);

// First switch among the candidates (all pairs when absent), scanning pairs
// (u, v), u < v, in lexicographic order.
std::optional<VertexPair> FindSwitch(
    const SwitchContext& ctx,
    std::optional<std::span<const VertexPair>> candidates = std::nullopt);

// Pairs within a vertex set, lexicographic.
std::vector<VertexPair> PairsWithin(VertexSet vertices);

// 2^-exponent.
struct DyadicRational {
  int exponent = 0;

  Rational ToRational() const { return Rational(1, PowerOfTwo(exponent)); }
  double ToDouble() const;
};

// Probability over G ~ G(n, 1/2) that {u, v} is a switch: every required
// G-edge is present independently with probability 1/2.
DyadicRational SwitchProbability(const Graph& hc, const VertexMap& pi, int u, int v);

struct DegreeClassification {
  double c = 0.0;
  // Hc-degree >= 4c.
  VertexSet a = 0;
  VertexSet b = 0;
  // Greedy maximal independent subset of b, scanning ascending indices.
  VertexSet b_prime = 0;
};

// Requires c >= 0.
DegreeClassification ClassifyDegrees(const Graph& hc, double c);

struct RefinementStep {
  int vertex = -1;
  double threshold = 0.0;
  int size_after = 0;
};

struct RefinementResult {
  VertexSet t = 0;
  std::vector<RefinementStep> steps;
  // Number of refinement steps taken.
  int depth = 0;
  // The threshold in force at termination. Unless depth_exceeded, every v
  // outside T has T inside N(v) or fewer than this many neighbours in T.
  double final_threshold = 0.0;
  // The schedule ran out while a refinement was still possible.
  bool depth_exceeded = false;
};

// Starting from T = b_prime, step i looks for the smallest vertex v outside T
// with |N(v) ∩ T| >= schedule[i] and T not inside N(v), and replaces T by
// N(v) ∩ T. Stops when no such v exists, or when the schedule runs out
// (depth_exceeded if the last threshold would still refine T). Requires a
// non-empty schedule of positive thresholds.
RefinementResult RefineT(const Graph& hc, VertexSet b_prime,
                         std::span<const double> schedule);

// threshold_i = |b_prime| / 2^(i+1) for i = 0..floor(4c), at least one entry.
std::vector<double> DefaultSchedule(int b_prime_size, double c);

struct InfluenceBudget {
  // G-pair (y, z), y < z -> number of T-pair indicators that depend on yz.
  // Pairs with b = 0 are omitted.
  std::map<VertexPair, int> b;
  BigInt sum_b_squared;
};

// Bookkeeping for the switch indicators X_{a,b}, a, b in t (Hc vertices),
// mapped through pi. Requires t independent in Hc (DomainError).
InfluenceBudget EdgeInfluenceBudget(const Graph& hc, const VertexMap& pi, VertexSet t);

// E[S] = sum over pairs in t of Pr[{pi(a), pi(b)} is a switch].
Rational ExpectedSwitchCount(const Graph& hc, const VertexMap& pi, VertexSet t);

// S: the number of pairs in t whose images form a switch in ctx.g().
int CountSwitchesWithin(const SwitchContext& ctx, VertexSet t);

}  // namespace uniqsub

#endif  // UNIQSUB_SWITCH_H_
