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

#include "uniqsub/embed.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "uniqsub/canon.h"
#include "uniqsub/enumerate.h"
#include "uniqsub/errors.h"

namespace uniqsub {
namespace {

// max f over hosts on n vertices (all sizes), from the subset oracle.
const Rational kFMax[] = {Rational(1), Rational(2), Rational(9, 4), Rational(9, 4),
                          Rational(75, 64)};

Graph RandomGraph(int n, CounterRng& rng) { return SampleUniformGraph(n, rng); }

Graph FirstRigid(int n) {
  for (const Graph& g : EnumerateUnlabelled(n)) {
    if (AutOrder(g) == 1) return g;
  }
  throw std::logic_error("no rigid graph");
}

TEST(CountOutcomeTest, KindsAndStrings) {
  EXPECT_EQ(CountOutcome::Zero().ToString(), "0");
  EXPECT_EQ(CountOutcome::AtLeast(2).ToString(), ">=2");
  EXPECT_EQ(CountOutcome::Exact(17).ToString(), "17");
  EXPECT_THROW(CountOutcome::Exact(1), std::logic_error);
  EXPECT_EQ(CountOutcome::One(VertexMap::Identity(2)).ToString(), "1");
}

TEST(CountOutcomeTest, Ordering) {
  const auto zero = CountOutcome::Zero();
  const auto one = CountOutcome::One(VertexMap::Identity(1));
  const auto two_plus = CountOutcome::AtLeast(2);
  const auto six = CountOutcome::Exact(6);
  EXPECT_EQ(Compare(zero, one), std::strong_ordering::less);
  EXPECT_EQ(Compare(one, two_plus), std::strong_ordering::less);
  EXPECT_EQ(Compare(two_plus, zero), std::strong_ordering::greater);
  EXPECT_EQ(Compare(six, six), std::strong_ordering::equal);
  EXPECT_EQ(Compare(two_plus, six), std::nullopt);
  EXPECT_EQ(Compare(two_plus, two_plus), std::nullopt);
}

TEST(CountEmbeddingsTest, Examples) {
  const Graph k3 = Graph::Complete(3);
  EXPECT_EQ(*CountEmbeddings(Graph::Complete(2), k3).ExactCount(), 6);
  EXPECT_EQ(*CountEmbeddings(Graph::Path(3), k3).ExactCount(), 6);
  for (const Graph& h : oracle::AllLabelledGraphs(3)) {
    EXPECT_EQ(*CountEmbeddings(Graph(3), h).ExactCount(), 6);
  }
  EXPECT_TRUE(CountEmbeddings(Graph(4), k3).IsZero());
  EXPECT_TRUE(CountEmbeddings(k3, Graph::Path(3)).IsZero());
}

TEST(CountEmbeddingsTest, MatchesInjectionOracle) {
  CounterRng rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const int nh = 1 + static_cast<int>(rng.UniformBelow(6));
    const int ng = 1 + static_cast<int>(rng.UniformBelow(nh));
    const Graph g = RandomGraph(ng, rng);
    const Graph h = RandomGraph(nh, rng);
    const CountOutcome outcome = CountEmbeddings(g, h);
    EXPECT_EQ(*outcome.ExactCount(), oracle::EmbeddingCount(g, h));
    if (outcome.IsOne()) {
      EXPECT_TRUE(IsEmbedding(g, h, outcome.witness()));
    }
  }
}

TEST(CountEmbeddingsTest, UniqueOutcomeCarriesWitness) {
  const Graph g = FirstRigid(6);
  const CountOutcome outcome = CountEmbeddings(g, g);
  ASSERT_TRUE(outcome.IsOne());
  EXPECT_EQ(outcome.witness(), VertexMap::Identity(6));
  EXPECT_TRUE(HasUniqueEmbedding(g, g));
}

TEST(CountEmbeddingsTest, EarlyExitAgreesWithExactCounts) {
  CounterRng rng(22);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 2 + static_cast<int>(rng.UniformBelow(6));
    const Graph g = RandomGraph(n, rng);
    const Graph h = RandomGraph(n, rng);
    const CountOutcome exact = CountEmbeddings(g, h);
    const CountOutcome early = CountEmbeddings(g, h, BigInt(2));
    const BigInt count = *exact.ExactCount();
    if (count == 0) {
      ASSERT_TRUE(early.IsZero());
    } else if (count == 1) {
      ASSERT_TRUE(early.IsOne());
    } else {
      ASSERT_TRUE(early.IsSaturated());
      ASSERT_EQ(early.value(), 2);
    }
  }
  EXPECT_THROW(CountEmbeddings(Graph(2), Graph(2), BigInt(0)), DomainError);
}

TEST(CountEmbeddingsTest, AddingEdgesNeverIncreasesTheCount) {
  CounterRng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.UniformBelow(6));
    const Graph g = RandomGraph(n, rng);
    const Graph h = RandomGraph(n, rng);
    const BigInt before = *CountEmbeddings(g, h).ExactCount();
    for (auto [u, v] : Complement(g).Edges()) {
      EXPECT_LE(*CountEmbeddings(g.WithEdge(u, v), h).ExactCount(), before);
    }
  }
}

TEST(CountEmbeddingsTest, LargeCountsUseBigIntegers) {
  // 22! overflows 64 bits.
  EXPECT_EQ(*CountEmbeddings(Graph(22), Graph(22)).ExactCount(), Factorial(22));
}

TEST(CopiesTest, Examples) {
  const Graph k3 = Graph::Complete(3);
  EXPECT_EQ(*CountSubgraphCopies(Graph::Complete(2), k3).ExactCount(), 3);
  EXPECT_TRUE(CountSubgraphCopies(k3, k3).IsOne());
  EXPECT_EQ(*CountSubgraphCopies(Graph::Path(3), k3).ExactCount(), 3);
}

TEST(CopiesTest, MatchesSubsetOracle) {
  CounterRng rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const int nh = 1 + static_cast<int>(rng.UniformBelow(5));
    const int ng = 1 + static_cast<int>(rng.UniformBelow(nh));
    const Graph g = RandomGraph(ng, rng);
    const Graph h = RandomGraph(nh, rng);
    EXPECT_EQ(*CountSubgraphCopies(g, h).ExactCount(), oracle::CopyCount(g, h));
  }
}

TEST(CopiesTest, EmbeddingsEqualCopiesTimesAutomorphisms) {
  for (int n = 1; n <= 4; ++n) {
    const auto graphs = oracle::AllLabelledGraphs(n);
    for (const Graph& g : graphs) {
      const std::uint64_t aut = AutOrder(g);
      for (const Graph& h : graphs) {
        ASSERT_EQ(*CountEmbeddings(g, h).ExactCount(),
                  *CountSubgraphCopies(g, h).ExactCount() * aut);
      }
    }
  }
  CounterRng rng(25);
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph g = RandomGraph(5, rng);
    const Graph h = RandomGraph(5, rng);
    ASSERT_EQ(*CountEmbeddings(g, h).ExactCount(),
              *CountSubgraphCopies(g, h).ExactCount() * AutOrder(g));
  }
}

TEST(UniqueTest, Examples) {
  const Graph k3 = Graph::Complete(3);
  EXPECT_TRUE(IsUniqueSubgraph(k3, k3));
  EXPECT_FALSE(IsUniqueSubgraph(Graph::Complete(2), k3));
  EXPECT_TRUE(IsUniqueSubgraph(Graph(3), k3));
  EXPECT_FALSE(HasUniqueEmbedding(k3, k3));
  for (const Graph& g : oracle::AllLabelledGraphs(3)) EXPECT_FALSE(HasUniqueEmbedding(g, k3));
  EXPECT_THROW(HasUniqueEmbedding(Graph(2), k3), DomainError);
}

TEST(UniqueTest, EquivalenceWithRigidUniqueSubgraphsSampledAtSix) {
  CounterRng rng(26);
  int positives = 0;
  const Graph rigid = FirstRigid(6);
  for (int trial = 0; trial < 3000; ++trial) {
    const Graph g = trial % 3 == 0 ? rigid : RandomGraph(6, rng);
    const Graph h = RandomGraph(6, rng);
    const bool unique = HasUniqueEmbedding(g, h);
    ASSERT_EQ(unique, IsUniqueSubgraph(g, h) && AutOrder(g) == 1);
    positives += unique ? 1 : 0;
  }
  EXPECT_GT(positives, 0);
}

TEST(FTest, Examples) {
  const FValue k3 = FOfH(Graph::Complete(3), Universe::kAllSizes);
  EXPECT_EQ(k3.unique_subgraph_count, 2u);
  EXPECT_EQ(k3.denominator, Rational(4, 3));
  EXPECT_EQ(k3.f, Rational(3, 2));
  EXPECT_EQ(FOfH(Graph(1), Universe::kAllSizes).f, Rational(1));
}

TEST(FTest, SpanningCountsNeverExceedAllSizes) {
  for (int n = 1; n <= 5; ++n) {
    const GraphUniverse all(n, Universe::kAllSizes);
    const GraphUniverse spanning(n, Universe::kSpanningOnly);
    for (const Graph& h : EnumerateUnlabelled(n)) {
      const FValue a = FOfH(h, all);
      const FValue s = FOfH(h, spanning);
      EXPECT_LE(s.unique_subgraph_count, a.unique_subgraph_count);
      // h itself is always its own unique spanning subgraph.
      EXPECT_GE(s.unique_subgraph_count, 1u);
      const oracle::UniqueCounts brute = oracle::UniqueSubgraphClasses(h);
      EXPECT_EQ(a.unique_subgraph_count, brute.all_sizes);
      EXPECT_EQ(s.unique_subgraph_count, brute.spanning);
    }
  }
}

TEST(FTest, OrderGuard) {
  EXPECT_THROW(FOfH(Graph(8), Universe::kAllSizes), ResourceError);
  EXPECT_THROW(FMaxExact(kMaxFMaxOrder + 1), DomainError);
  EXPECT_THROW(FMaxExact(0), DomainError);
  EXPECT_THROW(FOfH(Graph(3), GraphUniverse(4, Universe::kAllSizes)), DomainError);
}

TEST(FTest, FrozenMaxima) {
  for (int n = 1; n <= 5; ++n) {
    const FMaxResult result = FMaxExact(n, Universe::kAllSizes, 2);
    EXPECT_EQ(result.best.f, kFMax[n - 1]) << "n=" << n;
    EXPECT_EQ(FOfH(ParseGraph6(result.argmax_g6), Universe::kAllSizes).f, result.best.f);
    EXPECT_EQ(result.table.size(), EnumerateUnlabelled(n).size());
  }
  EXPECT_EQ(FMaxExact(1).argmax_g6, "@");
}

TEST(FTest, TieBreakIsSmallestCanonicalEncoding) {
  const FMaxResult result = FMaxExact(4);
  std::string best_bytes;
  for (const FValue& row : result.table) {
    if (row.f != result.best.f) continue;
    const std::string bytes = Canonicalize(row.h).canon_bytes;
    if (best_bytes.empty() || bytes < best_bytes) best_bytes = bytes;
  }
  EXPECT_EQ(Canonicalize(ParseGraph6(result.argmax_g6)).canon_bytes, best_bytes);
}

TEST(EstimateTest, TriangleIsNeverUnique) {
  const EstimateReport report = EstimateUniqueProb(Graph::Complete(3), 5000, 1);
  EXPECT_EQ(report.successes, 0u);
  EXPECT_EQ(report.estimate, 0.0);
  EXPECT_EQ(report.ci_low, 0.0);
  EXPECT_THROW(EstimateUniqueProb(Graph::Complete(3), 0, 1), DomainError);
}

TEST(EstimateTest, IntervalCoversExactProbabilityAtSix) {
  // Exact Pr[G has a unique embedding into h] over all 2^15 labelled G.
  CounterRng rng(27);
  for (int trial = 0; trial < 3; ++trial) {
    const Graph h = RandomGraph(6, rng);
    std::uint64_t unique = 0;
    const auto graphs = oracle::AllLabelledGraphs(6);
    for (const Graph& g : graphs) unique += HasUniqueEmbedding(g, h) ? 1 : 0;
    const double exact = static_cast<double>(unique) / graphs.size();
    const EstimateReport report = EstimateUniqueProb(h, 20000, 100 + trial);
    EXPECT_LE(report.ci_low, exact);
    EXPECT_GE(report.ci_high, exact);
    EXPECT_LE(report.ci_low, report.estimate);
    EXPECT_GE(report.ci_high, report.estimate);
  }
}

TEST(EstimateTest, IndependentOfThreadCount) {
  const Graph h = FirstRigid(6);
  const EstimateReport one = EstimateUniqueProb(h, 4000, 9, 1);
  const EstimateReport four = EstimateUniqueProb(h, 4000, 9, 4);
  EXPECT_EQ(one.successes, four.successes);
  EXPECT_EQ(one.seed, 9u);
}

TEST(EstimateTest, ClopperPearsonClosedForms) {
  // With zero successes the upper end is 1 - (alpha/2)^(1/n).
  const auto [lo, hi] = ClopperPearson(0, 10, 0.99);
  EXPECT_EQ(lo, 0.0);
  EXPECT_NEAR(hi, 1 - std::pow(0.005, 0.1), 1e-12);
  const auto [lo2, hi2] = ClopperPearson(10, 10, 0.99);
  EXPECT_NEAR(lo2, std::pow(0.005, 0.1), 1e-12);
  EXPECT_EQ(hi2, 1.0);
}

}  // namespace
}  // namespace uniqsub
