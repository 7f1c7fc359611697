// Copyright 2026 The aiitl authors
//
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

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace aiitl {

// All randomness in the project flows through these helpers. std::mt19937_64
// is fully specified by the standard, and the draw-to-value mappings below are
// written out explicitly, so identical seeds give identical results on every
// platform. The std::*_distribution classes are deliberately avoided (their
// algorithms are implementation-defined).

// splitmix64 finalizer; used to derive uncorrelated sub-seeds from the named
// config seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b));
}

constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(mix64(seed)); }

// Uniform draw in (0, 1], using the top 53 bits of one engine word.
inline double uniform01(Rng& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Standard normal via Box-Muller. Two engine words per call, no cached spare,
// so the stream position is a pure function of the call count.
inline double normal(Rng& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.28318530717958647692528676655900577 * u2);
}

// Unbiased draw in [0, n) by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

// Fisher-Yates.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

}  // namespace aiitl
