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

// Simple undirected graphs on at most 64 vertices, one 64-bit adjacency row
// per vertex, and the graph6 interchange format.

#ifndef UNIQSUB_GRAPH_H_
#define UNIQSUB_GRAPH_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uniqsub {

using VertexSet = std::uint64_t;

inline constexpr VertexSet Bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet LowBits(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int PopCount(VertexSet s) { return std::popcount(s); }

// Calls f(v) for each member of s in ascending order.
template <typename F>
void ForEachVertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

// Immutable labelled graph. Vertices are 0..order()-1; rows are symmetric
// with an empty diagonal, so loops and multi-edges cannot be represented.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  // Edgeless graph on n vertices, 1 <= n <= 64.
  explicit Graph(int n);

  // Throws DomainError unless every edge joins two distinct vertices < n.
  static Graph FromEdges(int n, std::span<const std::pair<int, int>> edges);
  static Graph FromEdges(int n,
                         std::initializer_list<std::pair<int, int>> edges) {
    return FromEdges(n, std::span(edges.begin(), edges.size()));
  }
  // Throws DomainError unless rows describe a simple undirected graph.
  static Graph FromRows(int n, std::vector<VertexSet> rows);

  static Graph Complete(int n);
  static Graph Path(int n);
  static Graph Cycle(int n);

  int order() const { return n_; }
  VertexSet row(int v) const { return rows_[v]; }
  std::span<const VertexSet> rows() const { return rows_; }
  VertexSet vertices() const { return LowBits(n_); }

  bool HasEdge(int u, int v) const { return (rows_[u] >> v) & 1; }
  int Degree(int v) const { return PopCount(rows_[v]); }
  int EdgeCount() const;
  // Edges (u, v) with u < v, ordered by u then v.
  std::vector<std::pair<int, int>> Edges() const;

  Graph WithEdge(int u, int v) const;
  Graph WithoutEdge(int u, int v) const;

  // The graph with edge image[u] image[v] for every edge uv; image must be a
  // permutation of 0..order()-1.
  Graph Relabelled(std::span<const int> image) const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b);

 private:
  Graph(int n, std::vector<VertexSet> rows) : n_(n), rows_(std::move(rows)) {}
  void CheckVertex(int v) const;

  int n_;
  std::vector<VertexSet> rows_;
};

// Injective map from {0..from_order-1} into {0..to_order-1}.
class VertexMap {
 public:
  VertexMap(int to_order, std::vector<int> image);

  static VertexMap Identity(int n);

  int from_order() const { return static_cast<int>(image_.size()); }
  int to_order() const { return static_cast<int>(inverse_.size()); }
  int operator()(int v) const { return image_[v]; }
  // -1 when w is not in the image.
  int Preimage(int w) const { return inverse_[w]; }
  std::span<const int> image() const { return image_; }
  bool IsBijection() const { return from_order() == to_order(); }
  // Requires a bijection.
  VertexMap Inverse() const;

  friend bool operator==(const VertexMap& a, const VertexMap& b) {
    return a.image_ == b.image_ && a.to_order() == b.to_order();
  }

 private:
  std::vector<int> image_;
  std::vector<int> inverse_;
};

// True when uv in E(from) implies map(u)map(v) in E(to).
bool IsEmbedding(const Graph& from, const Graph& to, const VertexMap& map);

Graph Complement(const Graph& g);

// Vertices are relabelled 0..|subset|-1 in the order given.
Graph InducedSubgraph(const Graph& g, std::span<const int> subset);

// graph6: header byte 63+n (or 126 followed by three bytes for n >= 63), then
// the upper triangle in column-major order packed six bits per byte, most
// significant bit first, each byte offset by 63. Throws ParseError naming the
// byte offset on malformed input, n outside 1..64, or trailing bytes.
Graph ParseGraph6(std::string_view text);
std::string ToGraph6(const Graph& g);

}  // namespace uniqsub

#endif  // UNIQSUB_GRAPH_H_
