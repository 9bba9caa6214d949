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

#include <gtest/gtest.h>

#include <map>

#include "oracles.h"
#include "uniqsub/enumerate.h"
#include "uniqsub/numeric.h"
#include "uniqsub/random.h"

namespace uniqsub {
namespace {

// Rigid classes on six vertices, counted by the permutation oracle.
constexpr int kRigidSixVertexClasses = 8;

Graph RandomGraph(int n, CounterRng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (rng() & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(n, edges);
}

TEST(CanonTest, SmallAutomorphismOrders) {
  EXPECT_EQ(AutOrder(Graph::Complete(3)), 6u);
  EXPECT_EQ(AutOrder(Graph::Path(3)), 2u);
  EXPECT_EQ(AutOrder(Graph(4)), 24u);
  EXPECT_EQ(AutOrder(Graph::Complete(2)), 2u);
  EXPECT_EQ(AutOrder(Graph::Cycle(5)), 10u);
  EXPECT_EQ(AutOrder(Graph(1)), 1u);
}

TEST(CanonTest, CanonMapRealizesCanonicalGraph) {
  CounterRng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = RandomGraph(1 + static_cast<int>(rng.UniformBelow(9)), rng);
    const CanonicalForm form = Canonicalize(g);
    const Graph relabelled = g.Relabelled(form.canon_map.image());
    EXPECT_EQ(relabelled, GraphFromCanonBytes(form.canon_bytes));
    EXPECT_EQ(Canonicalize(relabelled).canon_bytes, form.canon_bytes);
    EXPECT_EQ(static_cast<unsigned char>(form.canon_bytes[0]), g.order());
  }
}

TEST(CanonTest, InvariantUnderEveryRelabellingUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = oracle::AllPermutations(n);
    for (const Graph& g : EnumerateUnlabelled(n)) {
      const CanonicalForm form = Canonicalize(g);
      for (const auto& p : perms) {
        const CanonicalForm other = Canonicalize(g.Relabelled(p));
        ASSERT_EQ(other.canon_bytes, form.canon_bytes);
        ASSERT_EQ(other.aut_order, form.aut_order);
      }
    }
  }
}

TEST(CanonTest, AgreesWithPermutationOracleUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, std::string> oracle_to_canon;
    std::map<std::string, std::string> canon_to_oracle;
    for (const Graph& g : oracle::AllLabelledGraphs(n)) {
      const std::string key = oracle::CanonicalKey(g);
      const CanonicalForm form = Canonicalize(g);
      auto [a, new_a] = oracle_to_canon.emplace(key, form.canon_bytes);
      auto [b, new_b] = canon_to_oracle.emplace(form.canon_bytes, key);
      ASSERT_EQ(a->second, form.canon_bytes);
      ASSERT_EQ(b->second, key);
      if (n <= 5) ASSERT_EQ(form.aut_order, oracle::AutOrder(g));
    }
  }
}

TEST(CanonTest, AutOrderDividesFactorial) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : EnumerateUnlabelled(n)) {
      EXPECT_EQ(Factorial(n) % Canonicalize(g).aut_order, 0);
    }
  }
}

TEST(CanonTest, OrbitStabilizerIdentity) {
  // For n = 3: 6/6 + 6/2 + 6/2 + 6/6 = 8.
  for (int n = 1; n <= 5; ++n) {
    BigInt total = 0;
    for (const Graph& g : EnumerateUnlabelled(n)) total += Factorial(n) / AutOrder(g);
    EXPECT_EQ(total, PowerOfTwo(n * (n - 1) / 2));
  }
}

TEST(CanonTest, RigidSixVertexClasses) {
  int library = 0;
  int brute = 0;
  for (const Graph& g : EnumerateUnlabelled(6)) {
    library += AutOrder(g) == 1 ? 1 : 0;
    brute += oracle::AutOrder(g) == 1 ? 1 : 0;
  }
  EXPECT_EQ(brute, kRigidSixVertexClasses);
  EXPECT_EQ(library, kRigidSixVertexClasses);
  // Apart from the single vertex, nothing smaller is rigid.
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : EnumerateUnlabelled(n)) EXPECT_GT(AutOrder(g), 1u);
  }
}

TEST(IsomorphismTest, Examples) {
  EXPECT_TRUE(AreIsomorphic(Graph::Cycle(5), Complement(Graph::Cycle(5))));
  EXPECT_FALSE(AreIsomorphic(Graph::Complete(3), Graph::Path(3)));
  EXPECT_FALSE(AreIsomorphic(Graph(3), Graph(4)));
  CounterRng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.UniformBelow(9));
    const Graph g = RandomGraph(n, rng);
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    Shuffle(std::span(p), rng);
    EXPECT_TRUE(AreIsomorphic(g, g.Relabelled(p)));
    EXPECT_EQ(AutOrder(g), AutOrder(g.Relabelled(p)));
  }
}

TEST(IsomorphismTest, MatchesPermutationSearchOnRandomPairs) {
  CounterRng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.UniformBelow(6));
    const Graph a = RandomGraph(n, rng);
    const Graph b = RandomGraph(n, rng);
    EXPECT_EQ(AreIsomorphic(a, b), oracle::CanonicalKey(a) == oracle::CanonicalKey(b));
  }
}

TEST(IsomorphismTest, EquivalenceRelationOnCorpus) {
  CounterRng rng(13);
  std::vector<Graph> corpus;
  for (int i = 0; i < 40; ++i) corpus.push_back(RandomGraph(4, rng));
  for (const Graph& a : corpus) {
    EXPECT_TRUE(AreIsomorphic(a, a));
    for (const Graph& b : corpus) {
      EXPECT_EQ(AreIsomorphic(a, b), AreIsomorphic(b, a));
      for (const Graph& c : corpus) {
        if (AreIsomorphic(a, b) && AreIsomorphic(b, c)) EXPECT_TRUE(AreIsomorphic(a, c));
      }
    }
  }
}

}  // namespace
}  // namespace uniqsub
