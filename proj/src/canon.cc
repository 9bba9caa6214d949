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

#include "uniqsub/canon.h"

#include <algorithm>
#include <array>
#include <vector>

#include "uniqsub/errors.h"

namespace uniqsub {

namespace {

constexpr int kMaxPairs = Graph::kMaxVertices * (Graph::kMaxVertices - 1) / 2;
constexpr int kMaxWords = (kMaxPairs + 63) / 64;

inline int PairIndex(int i, int j) { return j * (j - 1) / 2 + i; }

// Upper triangle as a bit string, bit 0 in the most significant position of
// word 0, so comparing words in order compares the bit strings.
struct Code {
  std::array<std::uint64_t, kMaxWords> words{};

  void Set(int k) { words[k >> 6] |= std::uint64_t{1} << (63 - (k & 63)); }
};

// Three-way comparison of the first `bits` bits.
int ComparePrefix(const Code& a, const Code& b, int bits) {
  const int full = bits >> 6;
  for (int w = 0; w < full; ++w) {
    if (a.words[w] != b.words[w]) return a.words[w] < b.words[w] ? -1 : 1;
  }
  const int rest = bits & 63;
  if (rest == 0) return 0;
  const std::uint64_t mask = ~std::uint64_t{0} << (64 - rest);
  const std::uint64_t x = a.words[full] & mask;
  const std::uint64_t y = b.words[full] & mask;
  if (x == y) return 0;
  return x < y ? -1 : 1;
}

// Splits cells until every vertex in a cell has the same number of neighbours
// in every cell. Fragments replace their parent in ascending count order. The
// scan restarts after each split so the result depends only on cell positions.
void Refine(const Graph& g, std::vector<VertexSet>& cells) {
  std::array<int, Graph::kMaxVertices> count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const VertexSet cell = cells[c];
        if (PopCount(cell) <= 1) continue;
        int lo = Graph::kMaxVertices;
        int hi = -1;
        ForEachVertex(cell, [&](int v) {
          count[v] = PopCount(g.row(v) & splitter);
          lo = std::min(lo, count[v]);
          hi = std::max(hi, count[v]);
        });
        if (lo == hi) continue;
        std::vector<VertexSet> fragments;
        for (int value = lo; value <= hi; ++value) {
          VertexSet fragment = 0;
          ForEachVertex(cell, [&](int v) {
            if (count[v] == value) fragment |= Bit(v);
          });
          if (fragment != 0) fragments.push_back(fragment);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c),
                     fragments.begin(), fragments.end());
        changed = true;
        break;
      }
    }
  }
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void Run() {
    std::vector<VertexSet> cells{g_.vertices()};
    Visit(std::move(cells));
  }

  const Code& best() const { return best_; }
  const std::vector<int>& best_order() const { return best_order_; }
  std::uint64_t leaves_at_best() const { return leaves_at_best_; }

 private:
  // Bits fixed once cells[0..k) are singletons: all pairs inside the first k
  // positions.
  Code Encode(const std::vector<VertexSet>& cells, int k) const {
    Code code;
    std::array<int, Graph::kMaxVertices> at{};
    for (int p = 0; p < k; ++p) at[p] = std::countr_zero(cells[p]);
    for (int j = 1; j < k; ++j) {
      const VertexSet row = g_.row(at[j]);
      for (int i = 0; i < j; ++i) {
        if ((row >> at[i]) & 1) code.Set(PairIndex(i, j));
      }
    }
    return code;
  }

  void Visit(std::vector<VertexSet> cells) {
    Refine(g_, cells);
    int fixed = 0;
    while (fixed < static_cast<int>(cells.size()) && PopCount(cells[fixed]) == 1) {
      ++fixed;
    }
    const bool leaf = fixed == n_;
    if (have_best_) {
      const Code prefix = Encode(cells, fixed);
      const int cmp = ComparePrefix(prefix, best_, fixed * (fixed - 1) / 2);
      if (cmp > 0) return;
      if (leaf) {
        if (cmp == 0) {
          ++leaves_at_best_;
        } else {
          Accept(prefix, cells);
        }
        return;
      }
    } else if (leaf) {
      Accept(Encode(cells, fixed), cells);
      return;
    }
    std::size_t target = 0;
    while (PopCount(cells[target]) == 1) ++target;
    ForEachVertex(cells[target], [&](int v) {
      std::vector<VertexSet> child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(),
                   cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(Bit(v));
      child.push_back(cells[target] & ~Bit(v));
      child.insert(child.end(),
                   cells.begin() + static_cast<std::ptrdiff_t>(target) + 1,
                   cells.end());
      Visit(std::move(child));
    });
  }

  void Accept(const Code& code, const std::vector<VertexSet>& cells) {
    best_ = code;
    have_best_ = true;
    leaves_at_best_ = 1;
    best_order_.resize(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) best_order_[p] = std::countr_zero(cells[p]);
  }

  const Graph& g_;
  int n_;
  Code best_;
  bool have_best_ = false;
  std::uint64_t leaves_at_best_ = 0;
  std::vector<int> best_order_;
};

std::string BytesFromCode(int n, const Code& code) {
  const int pairs = n * (n - 1) / 2;
  const int bytes = (pairs + 7) / 8;
  std::string out(static_cast<std::size_t>(bytes) + 1, '\0');
  out[0] = static_cast<char>(n);
  for (int b = 0; b < bytes; ++b) {
    const std::uint64_t word = code.words[b >> 3];
    out[b + 1] = static_cast<char>((word >> (56 - 8 * (b & 7))) & 0xff);
  }
  return out;
}

}  // namespace

CanonicalForm Canonicalize(const Graph& g) {
  CanonSearch search(g);
  search.Run();
  const std::vector<int>& order = search.best_order();
  std::vector<int> position(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<int>(p);
  return CanonicalForm{BytesFromCode(g.order(), search.best()),
                       search.leaves_at_best(),
                       VertexMap(g.order(), std::move(position))};
}

Graph GraphFromCanonBytes(const std::string& canon_bytes) {
  if (canon_bytes.empty()) throw DomainError("empty canonical encoding");
  const int n = static_cast<unsigned char>(canon_bytes[0]);
  const int pairs = n * (n - 1) / 2;
  if (n < 1 || n > Graph::kMaxVertices ||
      canon_bytes.size() != static_cast<std::size_t>((pairs + 7) / 8 + 1)) {
    throw DomainError("malformed canonical encoding");
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const int k = PairIndex(i, j);
      const auto byte = static_cast<unsigned char>(canon_bytes[1 + k / 8]);
      if ((byte >> (7 - k % 8)) & 1) {
        rows[i] |= Bit(j);
        rows[j] |= Bit(i);
      }
    }
  }
  return Graph::FromRows(n, std::move(rows));
}

Graph CanonicalGraph(const Graph& g) {
  return g.Relabelled(Canonicalize(g).canon_map.image());
}

bool AreIsomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.EdgeCount() != b.EdgeCount()) return false;
  return Canonicalize(a).canon_bytes == Canonicalize(b).canon_bytes;
}

std::uint64_t AutOrder(const Graph& g) { return Canonicalize(g).aut_order; }

}  // namespace uniqsub
