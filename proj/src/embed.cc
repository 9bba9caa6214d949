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

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>

#include "uniqsub/canon.h"
#include "uniqsub/enumerate.h"
#include "uniqsub/errors.h"
#include "uniqsub/parallel.h"

namespace uniqsub {

CountOutcome CountOutcome::Exact(BigInt count) {
  if (count < 2) throw std::logic_error("Exact outcomes carry counts >= 2");
  return CountOutcome(Kind::kExact, std::move(count), std::nullopt);
}

std::string CountOutcome::ToString() const {
  if (kind_ == Kind::kAtLeast) return ">=" + value_.str();
  return value_.str();
}

std::optional<std::strong_ordering> Compare(const CountOutcome& a,
                                            const CountOutcome& b) {
  const auto order = [](const BigInt& x, const BigInt& y) {
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  };
  if (!a.IsSaturated() && !b.IsSaturated()) return order(a.value(), b.value());
  if (a.IsSaturated() && b.IsSaturated()) return std::nullopt;
  // One side is only a lower bound; only "exact < bound" is decidable.
  if (a.IsSaturated()) {
    if (b.value() < a.value()) return std::strong_ordering::greater;
    return std::nullopt;
  }
  if (a.value() < b.value()) return std::strong_ordering::less;
  return std::nullopt;
}

namespace {

// Backtracking over the vertices of g in descending-degree order. Candidates
// for the next vertex are the unused targets adjacent (in h) to the images of
// all of its already-placed neighbours. Once only isolated vertices remain,
// their placements are counted in closed form: the number of ways to put r
// vertices on f free targets is the falling factorial f^(r).
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& g, const Graph& h, std::optional<BigInt> limit)
      : g_(g), h_(h), n_g_(g.order()), n_h_(h.order()) {
    order_.resize(static_cast<std::size_t>(n_g_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.Degree(a) > g.Degree(b); });
    tail_ = n_g_;
    while (tail_ > 0 && g.Degree(order_[tail_ - 1]) == 0) --tail_;
    std::vector<int> position(static_cast<std::size_t>(n_g_));
    for (int p = 0; p < n_g_; ++p) position[order_[p]] = p;
    earlier_.resize(static_cast<std::size_t>(n_g_));
    for (int p = 0; p < n_g_; ++p) {
      ForEachVertex(g.row(order_[p]), [&](int w) {
        if (position[w] < p) earlier_[p].push_back(position[w]);
      });
    }
    tail_ways_ = FallingFactorial(n_h_ - tail_, n_g_ - tail_);
    if (limit) {
      // Stop once reached * tail_ways_ >= limit.
      BigInt needed = (*limit + tail_ways_ - 1) / tail_ways_;
      if (needed < 1) needed = 1;
      reach_limit_ = needed.convert_to<std::uint64_t>();
    }
    image_.assign(static_cast<std::size_t>(n_g_), -1);
  }

  void Run() { Extend(0, 0); }

  BigInt total() const { return BigInt(reached_) * tail_ways_; }
  bool stopped() const { return stopped_; }
  // First embedding found, as a map on g's original labels.
  std::optional<VertexMap> first() const { return first_; }

 private:
  void Extend(int p, VertexSet used) {
    if (p == tail_) {
      Reach(used);
      return;
    }
    VertexSet candidates = h_.vertices() & ~used;
    for (int q : earlier_[p]) candidates &= h_.row(image_[q]);
    while (candidates != 0 && !stopped_) {
      const int target = std::countr_zero(candidates);
      candidates &= candidates - 1;
      image_[p] = target;
      Extend(p + 1, used | Bit(target));
    }
    image_[p] = -1;
  }

  void Reach(VertexSet used) {
    if (reached_ == 0) {
      std::vector<int> image(static_cast<std::size_t>(n_g_));
      for (int p = 0; p < tail_; ++p) image[order_[p]] = image_[p];
      VertexSet free = h_.vertices() & ~used;
      for (int p = tail_; p < n_g_; ++p) {
        const int target = std::countr_zero(free);
        free &= free - 1;
        image[order_[p]] = target;
      }
      first_.emplace(n_h_, std::move(image));
    }
    ++reached_;
    if (reach_limit_ && reached_ >= *reach_limit_) stopped_ = true;
  }

  const Graph& g_;
  const Graph& h_;
  int n_g_;
  int n_h_;
  std::vector<int> order_;
  std::vector<std::vector<int>> earlier_;
  int tail_ = 0;
  BigInt tail_ways_;
  std::optional<std::uint64_t> reach_limit_;
  std::vector<int> image_;
  std::uint64_t reached_ = 0;
  bool stopped_ = false;
  std::optional<VertexMap> first_;
};

CountOutcome MakeOutcome(const BigInt& count, bool saturated,
                         const std::optional<BigInt>& limit,
                         const std::optional<VertexMap>& first) {
  if (saturated) return CountOutcome::AtLeast(*limit);
  if (count == 0) return CountOutcome::Zero();
  if (count == 1) return CountOutcome::One(*first);
  return CountOutcome::Exact(count);
}

void CheckLimit(const std::optional<BigInt>& limit) {
  if (limit && *limit < 1) throw DomainError("early_exit_at must be at least 1");
}

}  // namespace

CountOutcome CountEmbeddings(const Graph& g, const Graph& h,
                             std::optional<BigInt> early_exit_at) {
  CheckLimit(early_exit_at);
  if (g.order() > h.order()) return CountOutcome::Zero();
  EmbeddingSearch search(g, h, early_exit_at);
  search.Run();
  const BigInt total = search.total();
  const bool saturated = early_exit_at && total >= *early_exit_at;
  return MakeOutcome(total, saturated, early_exit_at, search.first());
}

CountOutcome CountSubgraphCopies(const Graph& g, const Graph& h,
                                 std::optional<BigInt> early_exit_at) {
  CheckLimit(early_exit_at);
  if (g.order() > h.order()) return CountOutcome::Zero();
  const BigInt aut = AutOrder(g);
  std::optional<BigInt> embedding_limit;
  if (early_exit_at) embedding_limit = *early_exit_at * aut;
  EmbeddingSearch search(g, h, embedding_limit);
  search.Run();
  const BigInt embeddings = search.total();
  if (!embedding_limit || embeddings < *embedding_limit) {
    if (embeddings % aut != 0) {
      throw std::logic_error("embedding count not divisible by |Aut|");
    }
  }
  const BigInt copies = embeddings / aut;
  const bool saturated = early_exit_at && copies >= *early_exit_at;
  return MakeOutcome(copies, saturated, early_exit_at, search.first());
}

bool IsUniqueSubgraph(const Graph& g, const Graph& h) {
  return CountSubgraphCopies(g, h, BigInt(2)).IsOne();
}

bool HasUniqueEmbedding(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) {
    throw DomainError("unique embedding needs graphs of equal order");
  }
  return CountEmbeddings(g, h, BigInt(2)).IsOne();
}

std::string ToString(Universe universe) {
  return universe == Universe::kAllSizes ? "all-sizes" : "spanning";
}

GraphUniverse::GraphUniverse(int max_order, Universe universe, unsigned threads)
    : max_order_(max_order), universe_(universe) {
  const int first = universe == Universe::kAllSizes ? 1 : max_order;
  for (int k = first; k <= max_order; ++k) {
    for (Graph& g : EnumerateUnlabelled(k, threads)) {
      entries_.push_back(Entry{std::move(g), 1});
    }
  }
  ParallelFor(threads, entries_.size(),
              [&](std::size_t i) { entries_[i].aut_order = AutOrder(entries_[i].g); });
}

FValue FOfH(const Graph& h, const GraphUniverse& universe) {
  if (universe.max_order() != h.order()) {
    throw DomainError("universe order does not match the host");
  }
  FValue value{h, universe.universe(), 0, {}, {}};
  for (const GraphUniverse::Entry& entry : universe.entries()) {
    const BigInt limit = 2 * BigInt(entry.aut_order);
    EmbeddingSearch search(entry.g, h, limit);
    search.Run();
    if (search.total() == entry.aut_order) ++value.unique_subgraph_count;
  }
  const int n = h.order();
  value.denominator = Rational(PowerOfTwo(static_cast<unsigned>(n * (n - 1) / 2)),
                               Factorial(static_cast<unsigned>(n)));
  value.f = Rational(value.unique_subgraph_count) / value.denominator;
  return value;
}

FValue FOfH(const Graph& h, Universe universe, bool allow_large, unsigned threads) {
  if (h.order() > kMaxFOrder && !allow_large) {
    throw ResourceError("f(H) on " + std::to_string(h.order()) +
                        " vertices exceeds the cost guard of " +
                        std::to_string(kMaxFOrder) + "; pass the override to run it");
  }
  if (h.order() > kMaxEnumerationOrder) {
    throw ResourceError("f(H) needs enumeration beyond order " +
                        std::to_string(kMaxEnumerationOrder));
  }
  return FOfH(h, GraphUniverse(h.order(), universe, threads));
}

FMaxResult FMaxExact(int n, Universe universe, unsigned threads) {
  if (n < 1 || n > kMaxFMaxOrder) {
    throw DomainError("f_max_exact order " + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxFMaxOrder));
  }
  const GraphUniverse shared(n, universe, threads);
  const std::vector<Graph> hosts = EnumerateUnlabelled(n, threads);
  std::vector<std::optional<FValue>> rows(hosts.size());
  ParallelFor(threads, hosts.size(),
              [&](std::size_t i) { rows[i] = FOfH(hosts[i], shared); });
  FMaxResult result{*rows.front(), ToGraph6(hosts.front()), {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // Hosts arrive sorted by canonical encoding; strict > keeps the first.
    if (rows[i]->f > result.best.f) {
      result.best = *rows[i];
      result.argmax_g6 = ToGraph6(hosts[i]);
    }
    result.table.push_back(std::move(*rows[i]));
  }
  return result;
}

Graph SampleUniformGraph(int n, CounterRng& rng) {
  if (n < 1 || n > Graph::kMaxVertices) throw DomainError("graph order out of range");
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  std::uint64_t bits = 0;
  int left = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        bits = rng();
        left = 64;
      }
      if (bits & 1) {
        rows[i] |= Bit(j);
        rows[j] |= Bit(i);
      }
      bits >>= 1;
      --left;
    }
  }
  return Graph::FromRows(n, std::move(rows));
}

std::pair<double, double> ClopperPearson(std::uint64_t successes,
                                         std::uint64_t trials, double confidence) {
  if (trials == 0 || successes > trials) {
    throw DomainError("Clopper-Pearson needs 0 <= successes <= trials, trials >= 1");
  }
  using Dist = boost::math::binomial_distribution<double>;
  const double alpha = (1.0 - confidence) / 2.0;
  const auto n = static_cast<double>(trials);
  const auto k = static_cast<double>(successes);
  const double low = successes == 0 ? 0.0 : Dist::find_lower_bound_on_p(n, k, alpha);
  const double high =
      successes == trials ? 1.0 : Dist::find_upper_bound_on_p(n, k, alpha);
  return {low, high};
}

EstimateReport EstimateUniqueProb(const Graph& h, std::uint64_t trials,
                                  std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw DomainError("estimate needs at least one trial");
  std::vector<char> hit(trials, 0);
  ParallelFor(threads, trials, [&](std::size_t t) {
    CounterRng rng(DeriveSeed(seed, t));
    hit[t] = HasUniqueEmbedding(SampleUniformGraph(h.order(), rng), h);
  });
  EstimateReport report;
  report.trials = trials;
  report.seed = seed;
  report.successes = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
  report.estimate = static_cast<double>(report.successes) / static_cast<double>(trials);
  std::tie(report.ci_low, report.ci_high) =
      ClopperPearson(report.successes, trials, report.confidence);
  return report;
}

}  // namespace uniqsub
