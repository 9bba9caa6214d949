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

#ifndef UNIQSUB_ENUMERATE_H_
#define UNIQSUB_ENUMERATE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "uniqsub/graph.h"
#include "uniqsub/numeric.h"

namespace uniqsub {

// 12,005,168 classes at order 10.
inline constexpr int kMaxEnumerationOrder = 10;

// Canonical encodings of every isomorphism class on n vertices, sorted.
//
// Classes on n vertices are grown from the sorted classes on n-1 vertices by
// adding a vertex with every possible neighbourhood. A child is kept only by
// its canonical parent: deleting the last vertex of the child's canonical
// graph must give back the parent's class. Siblings are deduplicated per
// parent, so each class is produced by exactly one parent and work can be
// split across parents. Throws DomainError unless 1 <= n <= 10.
std::vector<std::string> EnumerateCanonBytes(int n, unsigned threads = 1);

// One canonical representative per class, ordered by canon_bytes.
std::vector<Graph> EnumerateUnlabelled(int n, unsigned threads = 1);

struct PolyaReport {
  int n = 0;
  std::uint64_t unlabelled_count = 0;
  // 2^(n choose 2) / n!
  Rational polya_estimate;
  // unlabelled_count / polya_estimate; at least 1 for every n.
  Rational ratio;
};

PolyaReport MakePolyaReport(int n, std::uint64_t unlabelled_count);
PolyaReport ComputePolyaReport(int n, unsigned threads = 1);

// Fraction of classes on n vertices with a non-trivial automorphism.
Rational NontrivialAutFraction(int n, unsigned threads = 1);

}  // namespace uniqsub

#endif  // UNIQSUB_ENUMERATE_H_
