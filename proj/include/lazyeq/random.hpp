// Copyright 2026 The lazyeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAZYEQ_RANDOM_HPP_
#define LAZYEQ_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace lazyeq {

// The engine is fully specified by the standard; the distributions are not,
// so draws are derived from raw engine output by rejection to stay identical
// across standard libraries.
using Rng = std::mt19937_64;

// Uniform in [0, n); n must be positive.
inline std::uint64_t UniformIndex(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Uniform in [lo, hi].
inline std::int64_t UniformInt(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  UniformIndex(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

// True with probability num/den.
inline bool Bernoulli(Rng& rng, std::uint64_t num, std::uint64_t den) {
  return UniformIndex(rng, den) < num;
}

template <class Vec>
void Shuffle(Rng& rng, Vec& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = UniformIndex(rng, i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace lazyeq

#endif  // LAZYEQ_RANDOM_HPP_
