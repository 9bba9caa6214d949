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

#include "uniqsub/graph.h"

#include <algorithm>

#include "uniqsub/errors.h"

namespace uniqsub {

namespace {

void CheckOrder(int n) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw DomainError("graph order " + std::to_string(n) +
                      " outside 1.." + std::to_string(Graph::kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  CheckOrder(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::CheckVertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " not in a graph of order " +
                      std::to_string(n_));
  }
}

Graph Graph::FromEdges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    g.CheckVertex(u);
    g.CheckVertex(v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    g.rows_[u] |= Bit(v);
    g.rows_[v] |= Bit(u);
  }
  return g;
}

Graph Graph::FromRows(int n, std::vector<VertexSet> rows) {
  CheckOrder(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw DomainError("expected " + std::to_string(n) + " adjacency rows");
  }
  for (int u = 0; u < n; ++u) {
    if ((rows[u] & ~LowBits(n)) != 0 || (rows[u] & Bit(u)) != 0) {
      throw DomainError("adjacency row " + std::to_string(u) + " out of range");
    }
    bool symmetric = true;
    ForEachVertex(rows[u], [&](int v) { symmetric &= ((rows[v] >> u) & 1) != 0; });
    if (!symmetric) throw DomainError("adjacency rows are not symmetric");
  }
  return Graph(n, std::move(rows));
}

Graph Graph::Complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.rows_[v] = LowBits(n) & ~Bit(v);
  return g;
}

Graph Graph::Path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) {
    g.rows_[v] |= Bit(v + 1);
    g.rows_[v + 1] |= Bit(v);
  }
  return g;
}

Graph Graph::Cycle(int n) {
  if (n < 3) throw DomainError("a cycle needs at least three vertices");
  Graph g = Path(n);
  g.rows_[0] |= Bit(n - 1);
  g.rows_[n - 1] |= Bit(0);
  return g;
}

int Graph::EdgeCount() const {
  int twice = 0;
  for (VertexSet r : rows_) twice += PopCount(r);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n_; ++u) {
    ForEachVertex(rows_[u] & ~LowBits(u + 1),
                  [&](int v) { edges.emplace_back(u, v); });
  }
  return edges;
}

Graph Graph::WithEdge(int u, int v) const {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.rows_[u] |= Bit(v);
  g.rows_[v] |= Bit(u);
  return g;
}

Graph Graph::WithoutEdge(int u, int v) const {
  CheckVertex(u);
  CheckVertex(v);
  Graph g = *this;
  g.rows_[u] &= ~Bit(v);
  g.rows_[v] &= ~Bit(u);
  return g;
}

Graph Graph::Relabelled(std::span<const int> image) const {
  if (image.size() != static_cast<std::size_t>(n_)) {
    throw DomainError("relabelling must cover every vertex");
  }
  VertexSet seen = 0;
  for (int w : image) {
    CheckVertex(w);
    seen |= Bit(w);
  }
  if (seen != vertices()) throw DomainError("relabelling is not a permutation");
  std::vector<VertexSet> rows(static_cast<std::size_t>(n_), 0);
  for (int u = 0; u < n_; ++u) {
    VertexSet r = 0;
    ForEachVertex(rows_[u], [&](int v) { r |= Bit(image[v]); });
    rows[image[u]] = r;
  }
  return Graph(n_, std::move(rows));
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(),
                                                b.rows_.begin(), b.rows_.end());
}

VertexMap::VertexMap(int to_order, std::vector<int> image)
    : image_(std::move(image)) {
  if (to_order < 0 || image_.size() > static_cast<std::size_t>(to_order)) {
    throw DomainError("vertex map domain larger than its codomain");
  }
  inverse_.assign(static_cast<std::size_t>(to_order), -1);
  for (std::size_t v = 0; v < image_.size(); ++v) {
    const int w = image_[v];
    if (w < 0 || w >= to_order) {
      throw DomainError("vertex map image " + std::to_string(w) + " out of range");
    }
    if (inverse_[w] != -1) {
      throw DomainError("vertex map is not injective at " + std::to_string(w));
    }
    inverse_[w] = static_cast<int>(v);
  }
}

VertexMap VertexMap::Identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) image[v] = v;
  return VertexMap(n, std::move(image));
}

VertexMap VertexMap::Inverse() const {
  if (!IsBijection()) throw DomainError("only a bijection has an inverse");
  return VertexMap(from_order(), inverse_);
}

bool IsEmbedding(const Graph& from, const Graph& to, const VertexMap& map) {
  if (map.from_order() != from.order() || map.to_order() != to.order()) {
    return false;
  }
  for (int u = 0; u < from.order(); ++u) {
    VertexSet needed = 0;
    ForEachVertex(from.row(u), [&](int v) { needed |= Bit(map(v)); });
    if ((to.row(map(u)) & needed) != needed) return false;
  }
  return true;
}

Graph Complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = ~g.row(v) & LowBits(n) & ~Bit(v);
  return Graph::FromRows(n, std::move(rows));
}

Graph InducedSubgraph(const Graph& g, std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  if (k == 0) throw DomainError("induced subgraph needs at least one vertex");
  VertexSet seen = 0;
  for (int v : subset) {
    if (v < 0 || v >= g.order()) {
      throw DomainError("vertex " + std::to_string(v) + " not in a graph of order " +
                        std::to_string(g.order()));
    }
    if (seen & Bit(v)) throw DomainError("repeated vertex " + std::to_string(v));
    seen |= Bit(v);
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && g.HasEdge(subset[i], subset[j])) rows[i] |= Bit(j);
    }
  }
  return Graph::FromRows(k, std::move(rows));
}

// graph6 ------------------------------------------------------------------

namespace {

constexpr int kBias = 63;
constexpr unsigned char kLongHeader = 126;

int DecodeByte(std::string_view text, std::size_t offset) {
  const auto c = static_cast<unsigned char>(text[offset]);
  if (c < kBias || c > kLongHeader) {
    throw ParseError("byte " + std::to_string(c) + " outside the graph6 range",
                     offset);
  }
  return c - kBias;
}

}  // namespace

Graph ParseGraph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(text[0]) == kLongHeader) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kLongHeader) {
      throw ParseError("graph order exceeds 64", 0);
    }
    if (text.size() < 4) throw ParseError("truncated graph6 header", text.size());
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | DecodeByte(text, pos);
  } else {
    n = DecodeByte(text, 0);
    pos = 1;
  }
  if (n < 1 || n > Graph::kMaxVertices) {
    throw ParseError("graph order " + std::to_string(n) + " outside 1..64", 0);
  }
  const int order = static_cast<int>(n);
  const std::size_t pairs = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() < pos + body) {
    throw ParseError("truncated graph6 body: expected " + std::to_string(body) +
                         " data bytes",
                     text.size());
  }
  if (text.size() > pos + body) {
    throw ParseError("trailing bytes after graph6 body", pos + body);
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(order), 0);
  std::size_t bit = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t offset = pos + bit / 6;
      const int value = DecodeByte(text, offset);
      if ((value >> (5 - bit % 6)) & 1) {
        rows[i] |= Bit(j);
        rows[j] |= Bit(i);
      }
    }
  }
  if (body > 0) {
    const std::size_t last = pos + body - 1;
    const int value = DecodeByte(text, last);
    const std::size_t used = pairs - (body - 1) * 6;
    if ((value & ((1 << (6 - used)) - 1)) != 0) {
      throw ParseError("non-zero padding bits in final graph6 byte", last);
    }
  }
  return Graph::FromRows(order, std::move(rows));
}

std::string ToGraph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else {
    out.push_back(static_cast<char>(kLongHeader));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(kBias + ((n >> shift) & 63)));
    }
  }
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.HasEdge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (value << (6 - filled))));
  return out;
}

}  // namespace uniqsub
