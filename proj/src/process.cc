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

#include "uniqsub/process.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uniqsub/errors.h"
#include "uniqsub/random.h"

namespace uniqsub {

std::vector<VertexPair> AllPairs(int n) {
  std::vector<VertexPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  return pairs;
}

Graph ProcessTrace::GraphAt(int m) const {
  if (m < 0 || m > pair_count()) {
    throw DomainError("process time " + std::to_string(m) + " outside 0.." +
                      std::to_string(pair_count()));
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < m; ++k) {
    const auto [u, v] = edge_order[k];
    rows[u] |= Bit(v);
    rows[v] |= Bit(u);
  }
  return Graph::FromRows(n, std::move(rows));
}

ProcessTrace SampleTrace(int n, std::uint64_t seed) {
  if (n < 1 || n > Graph::kMaxVertices) throw DomainError("graph order out of range");
  ProcessTrace trace{n, AllPairs(n), seed};
  CounterRng rng(seed);
  Shuffle(std::span(trace.edge_order), rng);
  return trace;
}

ProcessTrace TraceFromOrder(int n, std::vector<VertexPair> edge_order) {
  if (n < 1 || n > Graph::kMaxVertices) throw DomainError("graph order out of range");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (edge_order.size() != pairs) {
    throw DomainError("edge order must list all " + std::to_string(pairs) + " pairs");
  }
  std::vector<VertexSet> seen(static_cast<std::size_t>(n), 0);
  for (auto& [u, v] : edge_order) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v || (seen[u] & Bit(v))) {
      throw DomainError("edge order is not a permutation of the vertex pairs");
    }
    seen[u] |= Bit(v);
  }
  return ProcessTrace{n, std::move(edge_order), 0};
}

namespace {

void CheckHost(const ProcessTrace& trace, const Graph& h) {
  if (h.order() != trace.n) {
    throw DomainError("host order " + std::to_string(h.order()) +
                      " differs from process order " + std::to_string(trace.n));
  }
}

// 0, 1 or 2 (meaning "two or more") embeddings of G_m, memoized.
class UniquenessProbe {
 public:
  UniquenessProbe(const ProcessTrace& trace, const Graph& h) : trace_(trace), h_(h) {}

  int operator()(int m) {
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    const CountOutcome outcome = CountEmbeddings(trace_.GraphAt(m), h_, BigInt(2));
    const int level = outcome.IsZero() ? 0 : (outcome.IsOne() ? 1 : 2);
    cache_.emplace(m, level);
    return level;
  }

  int evaluations() const { return static_cast<int>(cache_.size()); }

 private:
  const ProcessTrace& trace_;
  const Graph& h_;
  std::map<int, int> cache_;
};

}  // namespace

std::map<int, CountOutcome> EmbeddingTrajectory(const ProcessTrace& trace,
                                                const Graph& h,
                                                std::span<const int> probes,
                                                std::optional<BigInt> early_exit_at) {
  CheckHost(trace, h);
  std::map<int, CountOutcome> counts;
  for (int m : probes) {
    if (counts.contains(m)) continue;
    counts.emplace(m, CountEmbeddings(trace.GraphAt(m), h, early_exit_at));
  }
  return counts;
}

UniquenessInterval FindUniquenessInterval(const ProcessTrace& trace, const Graph& h) {
  CheckHost(trace, h);
  const int total = trace.pair_count();
  UniquenessProbe level(trace, h);

  // lo: first m with at most one embedding (N + 1 if none).
  int left = 0;
  int right = total + 1;
  while (left < right) {
    const int mid = left + (right - left) / 2;
    if (level(mid) <= 1) {
      right = mid;
    } else {
      left = mid + 1;
    }
  }
  const int lo = left;

  // hi: last m with at least one embedding (-1 if none).
  left = -1;
  right = total;
  while (left < right) {
    const int mid = left + (right - left + 1) / 2;
    if (level(mid) >= 1) {
      left = mid;
    } else {
      right = mid - 1;
    }
  }
  const int hi = left;

  UniquenessInterval interval;
  if (lo <= hi) {
    const bool ok = level(lo) == 1 && level(hi) == 1 &&
                    (lo == 0 || level(lo - 1) == 2) &&
                    (hi == total || level(hi + 1) == 0);
    if (!ok) throw std::logic_error("embedding counts are not monotone in m");
    interval.range = std::make_pair(lo, hi);
  }
  interval.probes = level.evaluations();
  return interval;
}

ProcessScan ScanProcess(const ProcessTrace& trace, const Graph& h) {
  CheckHost(trace, h);
  const int total = trace.pair_count();
  ProcessScan scan;
  std::vector<VertexSet> rows(static_cast<std::size_t>(trace.n), 0);
  for (int m = 0; m <= total; ++m) {
    if (m > 0) {
      const auto [u, v] = trace.edge_order[m - 1];
      rows[u] |= Bit(v);
      rows[v] |= Bit(u);
    }
    scan.outcomes.push_back(
        CountEmbeddings(Graph::FromRows(trace.n, rows), h, BigInt(2)));
  }
  int first = -1;
  int last = -1;
  for (int m = 0; m <= total; ++m) {
    if (m < total && Compare(scan.outcomes[m], scan.outcomes[m + 1]) ==
                         std::strong_ordering::less) {
      ++scan.monotonicity_violations;
    }
    if (scan.outcomes[m].IsOne()) {
      if (first < 0) first = m;
      if (last >= 0 && last != m - 1) scan.contiguous = false;
      last = m;
    }
  }
  if (first >= 0) scan.interval.range = std::make_pair(first, last);
  scan.interval.probes = total + 1;
  return scan;
}

XStatistic XWindow(int n, double L) {
  if (!(L > 0)) throw DomainError("L must be positive");
  const int total = n * (n - 1) / 2;
  const long double centre = static_cast<long double>(total) / 2;
  const long double half = static_cast<long double>(L) * n;
  XStatistic stat;
  stat.L = L;
  const long double lo = std::ceil(centre - half);
  const long double hi = std::floor(centre + half);
  stat.window_lo = lo < 0 ? 0 : static_cast<int>(std::min<long double>(lo, total + 1));
  stat.window_hi = hi > total ? total : static_cast<int>(std::max<long double>(hi, -1));
  stat.window_size = std::max(0, stat.window_hi - stat.window_lo + 1);
  return stat;
}

XStatistic ComputeXStatistic(const UniquenessInterval& interval, int n, double L) {
  XStatistic stat = XWindow(n, L);
  if (interval.range) {
    const int lo = std::max(stat.window_lo, interval.range->first);
    const int hi = std::min(stat.window_hi, interval.range->second);
    stat.x = std::max(0, hi - lo + 1);
  }
  return stat;
}

XStatistic ComputeXStatistic(const ProcessTrace& trace, const Graph& h, double L) {
  XWindow(trace.n, L);
  return ComputeXStatistic(FindUniquenessInterval(trace, h), trace.n, L);
}

Rational SupergraphCompletionProb(std::int64_t e_h, std::int64_t pair_count,
                                  std::int64_t m_star, std::int64_t m2) {
  if (m_star < 0 || m_star > m2 || m2 > pair_count) {
    throw DomainError("need 0 <= m* <= m2 <= N");
  }
  if (e_h < m_star || e_h > pair_count) throw DomainError("need m* <= e_H <= N");
  const std::int64_t steps = m2 - m_star;
  return Rational(Binomial(e_h - m_star, steps), Binomial(pair_count - m_star, steps));
}

}  // namespace uniqsub
