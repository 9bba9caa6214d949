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

#include "uniqsub/switch.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uniqsub/errors.h"

namespace uniqsub {

namespace {

VertexSet Image(const VertexMap& pi, VertexSet s) {
  VertexSet out = 0;
  ForEachVertex(s, [&](int x) { out |= Bit(pi(x)); });
  return out;
}

void CheckPair(int order, int u, int v) {
  if (u < 0 || v < 0 || u >= order || v >= order) {
    throw DomainError("switch vertices must lie in V(G)");
  }
  if (u == v) throw DomainError("a switch needs two distinct vertices");
}

}  // namespace

SwitchContext::SwitchContext(Graph hc, Graph g, VertexMap pi)
    : hc_(std::move(hc)), g_(std::move(g)), pi_(std::move(pi)) {
  if (hc_.order() != g_.order()) {
    throw DomainError("Hc and G must have the same order");
  }
  if (pi_.from_order() != hc_.order() || pi_.to_order() != g_.order()) {
    throw DomainError("pi must be a bijection V(Hc) -> V(G)");
  }
}

bool SwitchContext::PiIsEmbedding() const { return IsEmbedding(hc_, g_, pi_); }

SwitchRequirements RequiredNeighbours(const Graph& hc, const VertexMap& pi, int u,
                                      int v) {
  CheckPair(hc.order(), u, v);
  const int a = pi.Preimage(u);
  const int b = pi.Preimage(v);
  SwitchRequirements req;
  req.at_v = Image(pi, hc.row(a) & ~hc.row(b) & ~Bit(b));
  req.at_u = Image(pi, hc.row(b) & ~hc.row(a) & ~Bit(a));
  return req;
}

bool IsPiSwitch(const SwitchContext& ctx, int u, int v) {
  const SwitchRequirements req = RequiredNeighbours(ctx.hc(), ctx.pi(), u, v);
  return (ctx.g().row(v) & req.at_v) == req.at_v &&
         (ctx.g().row(u) & req.at_u) == req.at_u;
}

VertexMap ApplySwitch(const SwitchContext& ctx, int u, int v) {
  if (!IsPiSwitch(ctx, u, v)) {
    throw DomainError("{" + std::to_string(u) + "," + std::to_string(v) +
                      "} is not a switch for pi");
  }
  if (!ctx.PiIsEmbedding()) throw DomainError("pi is not an embedding of Hc into G");
  std::vector<int> image(ctx.pi().image().begin(), ctx.pi().image().end());
  image[ctx.pi().Preimage(u)] = v;
  image[ctx.pi().Preimage(v)] = u;
  VertexMap swapped(ctx.order(), std::move(image));
  if (!IsEmbedding(ctx.hc(), ctx.g(), swapped)) {
    throw std::logic_error("switched map is not an embedding");
  }
  return swapped;
}

std::vector<VertexPair> PairsWithin(VertexSet vertices) {
  std::vector<VertexPair> pairs;
  ForEachVertex(vertices, [&](int u) {
    ForEachVertex(vertices & ~LowBits(u + 1), [&](int v) { pairs.emplace_back(u, v); });
  });
  return pairs;
}

std::optional<VertexPair> FindSwitch(const SwitchContext& ctx,
                                     std::optional<std::span<const VertexPair>> candidates) {
  std::vector<VertexPair> pairs;
  if (candidates) {
    for (auto [u, v] : *candidates) {
      CheckPair(ctx.order(), u, v);
      pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
  } else {
    pairs = PairsWithin(ctx.g().vertices());
  }
  for (auto [u, v] : pairs) {
    if (IsPiSwitch(ctx, u, v)) return VertexPair{u, v};
  }
  return std::nullopt;
}

double DyadicRational::ToDouble() const { return std::ldexp(1.0, -exponent); }

DyadicRational SwitchProbability(const Graph& hc, const VertexMap& pi, int u, int v) {
  // The two requirement sets name pairs {v, x} and {u, y} with x, y outside
  // {u, v}, so they never overlap.
  return DyadicRational{RequiredNeighbours(hc, pi, u, v).size()};
}

DegreeClassification ClassifyDegrees(const Graph& hc, double c) {
  if (!(c >= 0)) throw DomainError("C must be non-negative");
  DegreeClassification result;
  result.c = c;
  for (int v = 0; v < hc.order(); ++v) {
    if (hc.Degree(v) >= 4 * c) {
      result.a |= Bit(v);
    } else {
      result.b |= Bit(v);
    }
  }
  ForEachVertex(result.b, [&](int v) {
    if ((hc.row(v) & result.b_prime) == 0) result.b_prime |= Bit(v);
  });
  return result;
}

RefinementResult RefineT(const Graph& hc, VertexSet b_prime,
                         std::span<const double> schedule) {
  if (schedule.empty()) throw DomainError("refinement schedule is empty");
  for (double threshold : schedule) {
    if (!(threshold > 0)) throw DomainError("refinement thresholds must be positive");
  }
  if ((b_prime & ~hc.vertices()) != 0) throw DomainError("B' contains a non-vertex");
  RefinementResult result;
  VertexSet t = b_prime;
  for (std::size_t step = 0;; ++step) {
    if (step == schedule.size()) {
      // Out of thresholds: the chain is cut short if the last one still bites.
      const double last = schedule.back();
      ForEachVertex(hc.vertices() & ~t, [&](int v) {
        const VertexSet common = hc.row(v) & t;
        if (PopCount(common) >= last && common != t) result.depth_exceeded = true;
      });
      result.final_threshold = last;
      break;
    }
    const double threshold = schedule[step];
    int chosen = -1;
    ForEachVertex(hc.vertices() & ~t, [&](int v) {
      if (chosen >= 0) return;
      const VertexSet common = hc.row(v) & t;
      if (PopCount(common) >= threshold && common != t) chosen = v;
    });
    if (chosen < 0) {
      result.final_threshold = threshold;
      break;
    }
    t &= hc.row(chosen);
    result.steps.push_back(RefinementStep{chosen, threshold, PopCount(t)});
  }
  result.t = t;
  result.depth = static_cast<int>(result.steps.size());
  return result;
}

std::vector<double> DefaultSchedule(int b_prime_size, double c) {
  if (!(c >= 0)) throw DomainError("C must be non-negative");
  const int entries = static_cast<int>(std::floor(4 * c)) + 1;
  std::vector<double> schedule;
  for (int i = 0; i < entries; ++i) {
    schedule.push_back(std::max(1, b_prime_size) / std::ldexp(1.0, i + 1));
  }
  return schedule;
}

InfluenceBudget EdgeInfluenceBudget(const Graph& hc, const VertexMap& pi, VertexSet t) {
  if ((t & ~hc.vertices()) != 0) throw DomainError("T contains a non-vertex");
  ForEachVertex(t, [&](int a) {
    if (hc.row(a) & t) throw DomainError("T is not independent in Hc");
  });
  InfluenceBudget budget;
  for (auto [a, b] : PairsWithin(t)) {
    const SwitchRequirements req = RequiredNeighbours(hc, pi, pi(a), pi(b));
    const auto add = [&](int end, VertexSet others) {
      ForEachVertex(others, [&](int x) {
        ++budget.b[VertexPair{std::min(end, x), std::max(end, x)}];
      });
    };
    add(pi(b), req.at_v);
    add(pi(a), req.at_u);
  }
  budget.sum_b_squared = 0;
  for (const auto& [pair, count] : budget.b) budget.sum_b_squared += BigInt(count) * count;
  return budget;
}

Rational ExpectedSwitchCount(const Graph& hc, const VertexMap& pi, VertexSet t) {
  Rational total = 0;
  for (auto [a, b] : PairsWithin(t)) {
    total += SwitchProbability(hc, pi, pi(a), pi(b)).ToRational();
  }
  return total;
}

int CountSwitchesWithin(const SwitchContext& ctx, VertexSet t) {
  int count = 0;
  for (auto [a, b] : PairsWithin(t)) {
    count += IsPiSwitch(ctx, ctx.pi()(a), ctx.pi()(b)) ? 1 : 0;
  }
  return count;
}

}  // namespace uniqsub
