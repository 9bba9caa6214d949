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

#ifndef UNIQSUB_RANDOM_H_
#define UNIQSUB_RANDOM_H_

#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace uniqsub {

// Counter-based generator: the i-th output is Mix64(key + i * golden gamma),
// i.e. SplitMix64. Every output depends only on (key, i), so streams derived
// with DeriveSeed are reproducible regardless of how work is scheduled.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return Mix64(key_ + (++counter_) * kGamma); }

  // Uniform integer in [0, bound); bound must be positive. Lemire's
  // multiply-shift with rejection, so the result is unbiased.
  std::uint64_t UniformBelow(std::uint64_t bound);

  std::uint64_t counter() const { return counter_; }

  static constexpr std::uint64_t Mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Seed for the index-th independent substream of a run seeded with `seed`.
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return CounterRng::Mix64(seed ^ CounterRng::Mix64(index + 0x632be59bd9b4e019ULL));
}

// Fisher-Yates with CounterRng::UniformBelow; the permutation is a pure
// function of the generator state, independent of the standard library.
template <typename T>
void Shuffle(std::span<T> items, CounterRng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.UniformBelow(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace uniqsub

#endif  // UNIQSUB_RANDOM_H_
