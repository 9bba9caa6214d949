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

// Brute-force reference implementations for tests. They use only
// Graph::HasEdge / order and plain loops, never the library's search code.

#ifndef UNIQSUB_TESTS_ORACLES_H_
#define UNIQSUB_TESTS_ORACLES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "uniqsub/graph.h"

namespace uniqsub::oracle {

// Every labelled graph on n vertices, indexed by its pair mask in graph6
// pair order.
std::vector<Graph> AllLabelledGraphs(int n);
Graph GraphFromPairMask(int n, std::uint64_t mask);

std::vector<std::vector<int>> AllPermutations(int n);

// Lexicographically smallest adjacency string over all relabellings,
// prefixed by the order.
std::string CanonicalKey(const Graph& g);
std::uint64_t AutOrder(const Graph& g);

bool IsEmbedding(const Graph& from, const Graph& to, const std::vector<int>& image);
// Every injective map, tried one by one.
std::uint64_t EmbeddingCount(const Graph& g, const Graph& h);

// Pairs (vertex subset, edge subset) of h forming a graph isomorphic to g.
std::uint64_t CopyCount(const Graph& g, const Graph& h);

struct UniqueCounts {
  std::uint64_t all_sizes = 0;
  std::uint64_t spanning = 0;
};

// Classes with exactly one copy in h, found by listing every vertex subset
// and every edge subset of h.
UniqueCounts UniqueSubgraphClasses(const Graph& h);

// The switch condition spelled out vertex by vertex.
bool SwitchCondition(const Graph& hc, const Graph& g, const std::vector<int>& image,
                     int u, int v);

}  // namespace uniqsub::oracle

#endif  // UNIQSUB_TESTS_ORACLES_H_
