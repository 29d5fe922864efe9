/*
 * Copyright 2026 The gsa Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GSA_RNG_HPP_
#define GSA_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "gsa/field.hpp"

namespace gsa {

/// SplitMix64 finalizer; used to derive independent sub-seeds so that
/// (seed, tag) streams never alias for distinct tags.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  return mix_seed(base ^ mix_seed(tag));
}

/// Deterministic seeded generator. mt19937_64 is fully specified by the
/// standard, so streams reproduce across platforms and toolchains.
/// Field residues are drawn by masked rejection sampling: no modulo bias.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(mix_seed(seed)) {}

  std::uint64_t next_u64() { return gen_(); }

  std::uint64_t uniform_residue(const PrimeField& f) {
    const std::uint64_t q = f.modulus();
    if (q == 1) return 0;
    const std::uint64_t mask = mask_for(q);
    for (;;) {
      std::uint64_t r = gen_() & mask;
      if (r < q) return r;
    }
  }

  /// Uniform in [0, n), rejection sampled.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t mask = mask_for(n);
    for (;;) {
      std::uint64_t r = gen_() & mask;
      if (r < n) return r;
    }
  }

  std::vector<std::uint64_t> uniform_block(const PrimeField& f, std::size_t n) {
    std::vector<std::uint64_t> out(n);
    for (auto& v : out) v = uniform_residue(f);
    return out;
  }

 private:
  static std::uint64_t mask_for(std::uint64_t n) {
    // Smallest all-ones mask covering n-1.
    std::uint64_t m = n - 1;
    m |= m >> 1;
    m |= m >> 2;
    m |= m >> 4;
    m |= m >> 8;
    m |= m >> 16;
    m |= m >> 32;
    return m;
  }

  std::mt19937_64 gen_;
};

}  // namespace gsa

#endif  // GSA_RNG_HPP_
