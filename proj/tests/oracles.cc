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

#include "oracles.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace uniqsub::oracle {

Graph GraphFromPairMask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++index) {
      if ((mask >> index) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(n, edges);
}

std::vector<Graph> AllLabelledGraphs(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Graph> graphs;
  graphs.reserve(std::size_t{1} << pairs);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    graphs.push_back(GraphFromPairMask(n, mask));
  }
  return graphs;
}

std::vector<std::vector<int>> AllPermutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

namespace {

std::string Relabelled(const Graph& g, const std::vector<int>& p) {
  std::string bits;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) bits += g.HasEdge(p[i], p[j]) ? '1' : '0';
  }
  return bits;
}

}  // namespace

std::string CanonicalKey(const Graph& g) {
  std::string best;
  bool first = true;
  for (const auto& p : AllPermutations(g.order())) {
    std::string bits = Relabelled(g, p);
    if (first || bits < best) best = std::move(bits);
    first = false;
  }
  return std::to_string(g.order()) + ":" + best;
}

std::uint64_t AutOrder(const Graph& g) {
  std::uint64_t count = 0;
  for (const auto& p : AllPermutations(g.order())) {
    bool same = true;
    for (int u = 0; u < g.order() && same; ++u) {
      for (int v = 0; v < g.order() && same; ++v) {
        same = g.HasEdge(u, v) == g.HasEdge(p[u], p[v]);
      }
    }
    count += same ? 1 : 0;
  }
  return count;
}

bool IsEmbedding(const Graph& from, const Graph& to, const std::vector<int>& image) {
  for (int u = 0; u < from.order(); ++u) {
    for (int v = u + 1; v < from.order(); ++v) {
      if (image[u] == image[v]) return false;
      if (from.HasEdge(u, v) && !to.HasEdge(image[u], image[v])) return false;
    }
  }
  return true;
}

namespace {

void CountMaps(const Graph& g, const Graph& h, std::vector<int>& image,
               std::vector<bool>& used, std::uint64_t& count) {
  const int k = static_cast<int>(image.size());
  if (k == g.order()) {
    count += IsEmbedding(g, h, image) ? 1 : 0;
    return;
  }
  for (int w = 0; w < h.order(); ++w) {
    if (used[w]) continue;
    used[w] = true;
    image.push_back(w);
    CountMaps(g, h, image, used, count);
    image.pop_back();
    used[w] = false;
  }
}

// Canonical key of the k-vertex graph whose pairs (local graph6 order) are
// given by mask; memoized.
const std::string& KeyOf(int k, std::uint64_t mask) {
  static std::unordered_map<std::uint64_t, std::string> cache;
  const std::uint64_t id = (std::uint64_t(k) << 56) | mask;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, CanonicalKey(GraphFromPairMask(k, mask))).first;
  return it->second;
}

// Calls f(k, local mask) for every (vertex subset of size k, edge subset).
template <typename F>
void ForEachSubgraph(const Graph& h, bool spanning_only, F&& f) {
  const int n = h.order();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1) verts.push_back(v);
    }
    const int k = static_cast<int>(verts.size());
    if (spanning_only && k != n) continue;
    std::vector<int> local_edges;
    int index = 0;
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i, ++index) {
        if (h.HasEdge(verts[i], verts[j])) local_edges.push_back(index);
      }
    }
    const int e = static_cast<int>(local_edges.size());
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << e); ++sub) {
      std::uint64_t mask = 0;
      for (int b = 0; b < e; ++b) {
        if ((sub >> b) & 1) mask |= std::uint64_t{1} << local_edges[b];
      }
      f(k, mask);
    }
  }
}

}  // namespace

std::uint64_t EmbeddingCount(const Graph& g, const Graph& h) {
  if (g.order() > h.order()) return 0;
  std::vector<int> image;
  std::vector<bool> used(h.order(), false);
  std::uint64_t count = 0;
  CountMaps(g, h, image, used, count);
  return count;
}

std::uint64_t CopyCount(const Graph& g, const Graph& h) {
  const std::string target = CanonicalKey(g);
  std::uint64_t count = 0;
  ForEachSubgraph(h, false, [&](int k, std::uint64_t mask) {
    if (k == g.order() && KeyOf(k, mask) == target) ++count;
  });
  return count;
}

UniqueCounts UniqueSubgraphClasses(const Graph& h) {
  std::map<std::string, std::uint64_t> copies;
  ForEachSubgraph(h, false, [&](int k, std::uint64_t mask) { ++copies[KeyOf(k, mask)]; });
  UniqueCounts counts;
  const std::string spanning_prefix = std::to_string(h.order()) + ":";
  for (const auto& [key, count] : copies) {
    if (count != 1) continue;
    ++counts.all_sizes;
    if (key.rfind(spanning_prefix, 0) == 0) ++counts.spanning;
  }
  return counts;
}

bool SwitchCondition(const Graph& hc, const Graph& g, const std::vector<int>& image,
                     int u, int v) {
  const int n = hc.order();
  int a = -1;
  int b = -1;
  for (int x = 0; x < n; ++x) {
    if (image[x] == u) a = x;
    if (image[x] == v) b = x;
  }
  for (int x = 0; x < n; ++x) {
    if (x == a || x == b) continue;
    if (hc.HasEdge(a, x) && !hc.HasEdge(b, x) && !g.HasEdge(v, image[x])) return false;
    if (hc.HasEdge(b, x) && !hc.HasEdge(a, x) && !g.HasEdge(u, image[x])) return false;
  }
  return true;
}

}  // namespace uniqsub::oracle
