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

#include "uniqsub/enumerate.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "uniqsub/canon.h"
#include "uniqsub/errors.h"
#include "uniqsub/parallel.h"

namespace uniqsub {

namespace {

void CheckEnumerationOrder(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw DomainError("enumeration order " + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxEnumerationOrder));
  }
}

// Children of one canonical parent on k-1 vertices that it owns.
std::vector<std::string> AugmentParent(const std::string& parent_bytes) {
  const Graph parent = GraphFromCanonBytes(parent_bytes);
  const int k = parent.order() + 1;
  std::set<std::string> owned;
  std::vector<VertexSet> rows(static_cast<std::size_t>(k));
  std::vector<int> head(static_cast<std::size_t>(k - 1));
  for (int v = 0; v < k - 1; ++v) head[v] = v;
  for (VertexSet neighbours = 0; neighbours <= LowBits(k - 1); ++neighbours) {
    for (int v = 0; v < k - 1; ++v) {
      rows[v] = parent.row(v) | (((neighbours >> v) & 1) ? Bit(k - 1) : 0);
    }
    rows[k - 1] = neighbours;
    const Graph child = Graph::FromRows(k, rows);
    CanonicalForm form = Canonicalize(child);
    if (owned.contains(form.canon_bytes)) continue;
    const Graph canonical = child.Relabelled(form.canon_map.image());
    const Graph reduced = InducedSubgraph(canonical, head);
    if (Canonicalize(reduced).canon_bytes == parent_bytes) {
      owned.insert(std::move(form.canon_bytes));
    }
  }
  return {owned.begin(), owned.end()};
}

}  // namespace

std::vector<std::string> EnumerateCanonBytes(int n, unsigned threads) {
  CheckEnumerationOrder(n);
  std::vector<std::string> level{Canonicalize(Graph(1)).canon_bytes};
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<std::string>> children(level.size());
    ParallelFor(threads, level.size(),
                [&](std::size_t i) { children[i] = AugmentParent(level[i]); });
    std::vector<std::string> next;
    for (auto& batch : children) {
      next.insert(next.end(), std::make_move_iterator(batch.begin()),
                  std::make_move_iterator(batch.end()));
    }
    std::sort(next.begin(), next.end());
    if (std::adjacent_find(next.begin(), next.end()) != next.end()) {
      throw std::logic_error("a class was generated by two parents");
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> EnumerateUnlabelled(int n, unsigned threads) {
  std::vector<Graph> graphs;
  for (const std::string& bytes : EnumerateCanonBytes(n, threads)) {
    graphs.push_back(GraphFromCanonBytes(bytes));
  }
  return graphs;
}

PolyaReport MakePolyaReport(int n, std::uint64_t unlabelled_count) {
  PolyaReport report;
  report.n = n;
  report.unlabelled_count = unlabelled_count;
  const auto pairs = static_cast<unsigned>(n * (n - 1) / 2);
  report.polya_estimate = Rational(PowerOfTwo(pairs), Factorial(static_cast<unsigned>(n)));
  report.ratio = Rational(unlabelled_count) / report.polya_estimate;
  return report;
}

PolyaReport ComputePolyaReport(int n, unsigned threads) {
  return MakePolyaReport(n, EnumerateCanonBytes(n, threads).size());
}

Rational NontrivialAutFraction(int n, unsigned threads) {
  const std::vector<Graph> graphs = EnumerateUnlabelled(n, threads);
  std::vector<char> symmetric(graphs.size(), 0);
  ParallelFor(threads, graphs.size(),
              [&](std::size_t i) { symmetric[i] = AutOrder(graphs[i]) >= 2; });
  const auto count = std::count(symmetric.begin(), symmetric.end(), 1);
  return Rational(count, static_cast<long long>(graphs.size()));
}

}  // namespace uniqsub
