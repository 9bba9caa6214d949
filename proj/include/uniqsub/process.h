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

// The random graph process G_0 ⊂ G_1 ⊂ ... ⊂ G_N against a fixed host H.
//
// Adding edges to G can only destroy embeddings, so the embedding count of
// G_m into H is non-increasing in m and {m : exactly one embedding} is an
// interval. The interval search below relies on that.

#ifndef UNIQSUB_PROCESS_H_
#define UNIQSUB_PROCESS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uniqsub/embed.h"
#include "uniqsub/graph.h"
#include "uniqsub/numeric.h"

namespace uniqsub {

using VertexPair = std::pair<int, int>;

// All pairs (i, j), i < j, in graph6 order.
std::vector<VertexPair> AllPairs(int n);

struct ProcessTrace {
  int n = 0;
  // A permutation of AllPairs(n); G_m is the first m pairs.
  std::vector<VertexPair> edge_order;
  std::uint64_t seed = 0;

  int pair_count() const { return static_cast<int>(edge_order.size()); }
  // Requires 0 <= m <= N.
  Graph GraphAt(int m) const;
};

// Uniform random edge order drawn from CounterRng(seed).
ProcessTrace SampleTrace(int n, std::uint64_t seed);

// Validates that edge_order is a permutation of all pairs.
ProcessTrace TraceFromOrder(int n, std::vector<VertexPair> edge_order);

// Embedding counts of G_m into h at each probed m. Requires |V(h)| = n.
std::map<int, CountOutcome> EmbeddingTrajectory(
    const ProcessTrace& trace, const Graph& h, std::span<const int> probes,
    std::optional<BigInt> early_exit_at = std::nullopt);

struct UniquenessInterval {
  // [lo, hi] inclusive, or nullopt when G_m never embeds uniquely.
  std::optional<std::pair<int, int>> range;
  // Embedding-count evaluations spent.
  int probes = 0;

  int length() const { return range ? range->second - range->first + 1 : 0; }
  bool Contains(int m) const {
    return range && range->first <= m && m <= range->second;
  }
};

// Binary search on the two monotone predicates "count <= 1" and
// "count >= 1", each probe saturating at two embeddings; the endpoints are
// then re-checked at lo-1, lo, hi, hi+1. Throws std::logic_error if that
// re-check contradicts monotonicity.
UniquenessInterval FindUniquenessInterval(const ProcessTrace& trace, const Graph& h);

struct ProcessScan {
  // Outcome at every m = 0..N, saturating at two embeddings.
  std::vector<CountOutcome> outcomes;
  int monotonicity_violations = 0;
  bool contiguous = true;
  UniquenessInterval interval;
};

// Evaluates every m; the exhaustive counterpart to FindUniquenessInterval.
ProcessScan ScanProcess(const ProcessTrace& trace, const Graph& h);

struct XStatistic {
  double L = 0.0;
  // I = [N/2 - Ln, N/2 + Ln] rounded inward to integers and clipped to [0, N].
  int window_lo = 0;
  int window_hi = -1;
  int window_size = 0;
  // |{m in I : G_m has a unique embedding into H}|
  int x = 0;
};

// Window bounds only.
XStatistic XWindow(int n, double L);

// Requires L > 0.
XStatistic ComputeXStatistic(const ProcessTrace& trace, const Graph& h, double L);
XStatistic ComputeXStatistic(const UniquenessInterval& interval, int n, double L);

// Pr[G_{m2} ⊆ E | G_{m*} ⊆ E] for a fixed e_h-edge set E containing G_{m*}:
// C(e_h - m*, m2 - m*) / C(N - m*, m2 - m*). Requires m* <= m2 <= N and
// m* <= e_h <= N.
Rational SupergraphCompletionProb(std::int64_t e_h, std::int64_t pair_count,
                                  std::int64_t m_star, std::int64_t m2);

}  // namespace uniqsub

#endif  // UNIQSUB_PROCESS_H_
