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

#include <gtest/gtest.h>

#include <set>

#include "oracles.h"
#include "uniqsub/canon.h"
#include "uniqsub/errors.h"

namespace uniqsub {
namespace {

TEST(EnumerateTest, ClassCountsMatchBucketingOracle) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> keys;
    for (const Graph& g : oracle::AllLabelledGraphs(n)) keys.insert(oracle::CanonicalKey(g));
    EXPECT_EQ(EnumerateUnlabelled(n).size(), keys.size()) << "n=" << n;
  }
}

TEST(EnumerateTest, KnownCounts) {
  EXPECT_EQ(EnumerateUnlabelled(1).size(), 1u);
  EXPECT_EQ(EnumerateUnlabelled(4).size(), 11u);
  EXPECT_EQ(EnumerateUnlabelled(7).size(), 1044u);
}

TEST(EnumerateTest, SevenExtendsTheBucketedSixOneLevel) {
  // Every class on 7 vertices loses a vertex to some class on 6, and every
  // class on 6 gains one.
  std::set<std::string> six;
  for (const Graph& g : EnumerateUnlabelled(6)) six.insert(Canonicalize(g).canon_bytes);
  std::set<std::string> reached;
  std::set<std::string> seven;
  for (const Graph& g : EnumerateUnlabelled(7)) {
    seven.insert(Canonicalize(g).canon_bytes);
    for (int v = 0; v < 7; ++v) {
      std::vector<int> rest;
      for (int u = 0; u < 7; ++u) {
        if (u != v) rest.push_back(u);
      }
      reached.insert(Canonicalize(InducedSubgraph(g, rest)).canon_bytes);
    }
  }
  EXPECT_EQ(seven.size(), 1044u);
  EXPECT_EQ(reached, six);
}

TEST(EnumerateTest, NoTwoOutputsIsomorphicAndOrderIsStable) {
  for (int n = 1; n <= 7; ++n) {
    const auto bytes = EnumerateCanonBytes(n);
    EXPECT_TRUE(std::is_sorted(bytes.begin(), bytes.end()));
    EXPECT_EQ(std::set<std::string>(bytes.begin(), bytes.end()).size(), bytes.size());
    EXPECT_EQ(EnumerateCanonBytes(n, 3), bytes);
  }
}

TEST(EnumerateTest, RangeGuard) {
  EXPECT_THROW(EnumerateUnlabelled(0), DomainError);
  EXPECT_THROW(EnumerateUnlabelled(kMaxEnumerationOrder + 1), DomainError);
}

TEST(PolyaTest, Ratios) {
  EXPECT_EQ(ComputePolyaReport(1).ratio, Rational(1));
  EXPECT_EQ(ComputePolyaReport(4).ratio, Rational(33, 8));
  Rational previous = ComputePolyaReport(4).ratio;
  for (int n = 5; n <= 8; ++n) {
    const PolyaReport report = ComputePolyaReport(n);
    EXPECT_LT(report.ratio, previous) << "n=" << n;
    EXPECT_GE(report.ratio, 1);
    previous = report.ratio;
  }
  const PolyaReport eight = ComputePolyaReport(8);
  EXPECT_EQ(eight.unlabelled_count, 12346u);
  EXPECT_EQ(eight.ratio, Rational(12346 * 40320, 1 << 28));
}

TEST(PolyaTest, NontrivialAutomorphismFraction) {
  EXPECT_EQ(NontrivialAutFraction(3), Rational(1));
  EXPECT_EQ(NontrivialAutFraction(5), Rational(1));
  EXPECT_LT(NontrivialAutFraction(8), NontrivialAutFraction(7));
}

}  // namespace
}  // namespace uniqsub
