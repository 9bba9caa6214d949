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

// Canonical labelling and automorphism-group order.
//
// The search refines an ordered vertex partition to an equitable one (cells
// split by neighbour counts into each other cell, fragments ordered by count),
// then individualizes each vertex of the first non-singleton cell in turn.
// Every discrete partition reached is a leaf; the canonical form is the leaf
// whose relabelled upper triangle is lexicographically smallest. Subtrees
// whose fixed prefix is already larger than the best leaf are skipped, which
// never discards a minimal leaf, so the number of minimal leaves is exactly
// |Aut(G)|. There is no automorphism pruning: the cost grows with |Aut(G)|,
// which is fine for the small orders this library targets.

#ifndef UNIQSUB_CANON_H_
#define UNIQSUB_CANON_H_

#include <cstdint>
#include <string>

#include "uniqsub/graph.h"

namespace uniqsub {

struct CanonicalForm {
  // Byte 0 is the order; then the canonically relabelled upper triangle in
  // graph6 pair order (column-major), eight bits per byte, most significant
  // bit first, zero padded. Equal bytes <=> isomorphic graphs.
  std::string canon_bytes;
  std::uint64_t aut_order = 1;
  // Original vertex -> canonical position.
  VertexMap canon_map;
};

CanonicalForm Canonicalize(const Graph& g);

// The graph encoded by canon_bytes.
Graph CanonicalGraph(const Graph& g);
Graph GraphFromCanonBytes(const std::string& canon_bytes);

bool AreIsomorphic(const Graph& a, const Graph& b);

std::uint64_t AutOrder(const Graph& g);

}  // namespace uniqsub

#endif  // UNIQSUB_CANON_H_
