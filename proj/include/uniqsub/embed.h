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

// Embedding and subgraph-copy counting, unique subgraphs, and f(H).
//
// An embedding of G into H is an injective vertex map sending edges to edges
// (non-edges are unconstrained). A copy of G in H is a pair (vertex subset,
// edge subset) of H isomorphic to G; embeddings that differ by an
// automorphism of G give the same copy, so copies = embeddings / |Aut(G)|.

#ifndef UNIQSUB_EMBED_H_
#define UNIQSUB_EMBED_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uniqsub/graph.h"
#include "uniqsub/numeric.h"
#include "uniqsub/random.h"

namespace uniqsub {

// Zero | One(witness) | AtLeast(threshold) | Exact(count >= 2).
class CountOutcome {
 public:
  enum class Kind { kZero, kOne, kAtLeast, kExact };

  static CountOutcome Zero() { return CountOutcome(Kind::kZero, 0, std::nullopt); }
  static CountOutcome One(VertexMap witness) {
    return CountOutcome(Kind::kOne, 1, std::move(witness));
  }
  static CountOutcome AtLeast(BigInt threshold) {
    return CountOutcome(Kind::kAtLeast, std::move(threshold), std::nullopt);
  }
  static CountOutcome Exact(BigInt count);

  Kind kind() const { return kind_; }
  bool IsZero() const { return kind_ == Kind::kZero; }
  bool IsOne() const { return kind_ == Kind::kOne; }
  bool IsSaturated() const { return kind_ == Kind::kAtLeast; }
  // Only for One.
  const VertexMap& witness() const { return *witness_; }
  // The count, or the threshold for AtLeast.
  const BigInt& value() const { return value_; }
  std::optional<BigInt> ExactCount() const {
    if (kind_ == Kind::kAtLeast) return std::nullopt;
    return value_;
  }
  // "0", "1", ">=k" or "k".
  std::string ToString() const;

  // Both sides known exactly or the comparison is implied by the bounds:
  // Zero < One < AtLeast(2) <= Exact(k). Returns nullopt when undecidable
  // (two saturated outcomes, or AtLeast(t) against Exact(k) with k >= t).
  friend std::optional<std::strong_ordering> Compare(const CountOutcome& a,
                                                     const CountOutcome& b);

 private:
  CountOutcome(Kind kind, BigInt value, std::optional<VertexMap> witness)
      : kind_(kind), value_(std::move(value)), witness_(std::move(witness)) {}

  Kind kind_;
  BigInt value_;
  std::optional<VertexMap> witness_;
};

// Number of embeddings of g into h. With early_exit_at = k (k >= 1) the
// search stops once k embeddings are found and reports AtLeast(k); fewer
// than k are reported exactly. |V(g)| > |V(h)| gives Zero.
CountOutcome CountEmbeddings(const Graph& g, const Graph& h,
                             std::optional<BigInt> early_exit_at = std::nullopt);

// Number of subgraphs of h isomorphic to g; same early-exit convention.
CountOutcome CountSubgraphCopies(const Graph& g, const Graph& h,
                                 std::optional<BigInt> early_exit_at = std::nullopt);

// g is a unique subgraph of h.
bool IsUniqueSubgraph(const Graph& g, const Graph& h);

// g has exactly one embedding into h. Requires equal orders (DomainError).
bool HasUniqueEmbedding(const Graph& g, const Graph& h);

enum class Universe { kAllSizes, kSpanningOnly };
std::string ToString(Universe universe);

inline constexpr int kMaxFOrder = 7;
inline constexpr int kMaxFMaxOrder = 6;

struct FValue {
  Graph h;
  Universe universe = Universe::kAllSizes;
  // Isomorphism classes G in the universe with G a unique subgraph of h.
  std::uint64_t unique_subgraph_count = 0;
  // 2^(n choose 2) / n!
  Rational denominator;
  Rational f;
};

// Every class on 1..max_order vertices (AllSizes) or on exactly max_order
// vertices (SpanningOnly), with automorphism orders, built once and shared
// across many hosts.
class GraphUniverse {
 public:
  struct Entry {
    Graph g;
    std::uint64_t aut_order;
  };

  GraphUniverse(int max_order, Universe universe, unsigned threads = 1);

  int max_order() const { return max_order_; }
  Universe universe() const { return universe_; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  int max_order_;
  Universe universe_;
  std::vector<Entry> entries_;
};

// Throws ResourceError when |V(h)| > kMaxFOrder unless allow_large (still
// bounded by the enumeration cap).
FValue FOfH(const Graph& h, Universe universe, bool allow_large = false,
            unsigned threads = 1);
// Uses a prebuilt universe whose max_order equals |V(h)|.
FValue FOfH(const Graph& h, const GraphUniverse& universe);

struct FMaxResult {
  FValue best;
  std::string argmax_g6;
  // One row per class of hosts, in canonical order.
  std::vector<FValue> table;
};

// Maximum of f over all hosts on n vertices, ties broken by the smallest
// canonical encoding. Requires 1 <= n <= kMaxFMaxOrder.
FMaxResult FMaxExact(int n, Universe universe = Universe::kAllSizes,
                     unsigned threads = 1);

// A sample from G(n, 1/2): one fair bit per vertex pair in graph6 pair order.
Graph SampleUniformGraph(int n, CounterRng& rng);

struct EstimateReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  // Two-sided Clopper-Pearson interval.
  double confidence = 0.99;
  double ci_low = 0.0;
  double ci_high = 1.0;
};

// Clopper-Pearson interval for `successes` out of `trials`.
std::pair<double, double> ClopperPearson(std::uint64_t successes,
                                         std::uint64_t trials, double confidence);

// Fraction of G ~ G(n, 1/2) with a unique embedding into h. Trial t uses the
// substream DeriveSeed(seed, t), so results are independent of `threads`.
// Requires trials >= 1.
EstimateReport EstimateUniqueProb(const Graph& h, std::uint64_t trials,
                                  std::uint64_t seed, unsigned threads = 1);

}  // namespace uniqsub

#endif  // UNIQSUB_EMBED_H_
