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

// AVX2 variants of the block kernels. This TU is compiled with -mavx2 and is
// only entered after a runtime CPU check, so plain intrinsics are fine.
//
// All residues are < q < 2^62, so 64-bit lanes never exceed the positive
// int64 range before a reduction step and signed lane compares are valid.
//
// The multiply kernels are specific to the Mersenne modulus M = 2^61-1.
// With x = xL + 2^32 xH and the scalar c = cL + 2^32 cH (xH, cH < 2^29):
//
//   c*x = cL*xL + 2^32 (cL*xH + cH*xL) + 2^64 cH*xH
//
// and modulo M, 2^64 == 8 and 2^32*(mid) == 2^32*(mid mod 2^29) + (mid >> 29),
// since 2^61 == 1. Each summand stays below 2^61, the accumulated value below
// 2^63, and two shift-add folds plus one conditional subtract canonicalize.

#if defined(__x86_64__)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

#include "gsa/kernels.hpp"

namespace gsa::kernels {

namespace {

constexpr std::uint64_t kM61 = (std::uint64_t{1} << 61) - 1;

inline __m256i reduce_once(__m256i v, __m256i qv, __m256i qm1) {
  // v < 2q; subtract q where v > q-1.
  __m256i gt = _mm256_cmpgt_epi64(v, qm1);
  return _mm256_sub_epi64(v, _mm256_and_si256(gt, qv));
}

// c*x mod 2^61-1 per 64-bit lane, c broadcast.
inline __m256i mulmod_m61(__m256i x, __m256i cL, __m256i cH) {
  const __m256i m61 = _mm256_set1_epi64x(static_cast<long long>(kM61));
  const __m256i mask29 = _mm256_set1_epi64x((1LL << 29) - 1);

  __m256i xH = _mm256_srli_epi64(x, 32);
  __m256i m0 = _mm256_mul_epu32(x, cL);   // cL*xL
  __m256i m1 = _mm256_mul_epu32(xH, cL);  // cL*xH  < 2^61
  __m256i m2 = _mm256_mul_epu32(x, cH);   // cH*xL  < 2^61
  __m256i m3 = _mm256_mul_epu32(xH, cH);  // cH*xH  < 2^58

  __m256i mid = _mm256_add_epi64(m1, m2);  // < 2^62
  __m256i midLo = _mm256_and_si256(mid, mask29);
  __m256i midHi = _mm256_srli_epi64(mid, 29);

  __m256i acc = _mm256_add_epi64(_mm256_and_si256(m0, m61),
                                 _mm256_srli_epi64(m0, 61));
  acc = _mm256_add_epi64(acc, _mm256_slli_epi64(midLo, 32));
  acc = _mm256_add_epi64(acc, midHi);
  acc = _mm256_add_epi64(acc, _mm256_slli_epi64(m3, 3));  // 2^64 == 8 mod M

  acc = _mm256_add_epi64(_mm256_and_si256(acc, m61), _mm256_srli_epi64(acc, 61));
  const __m256i m61m1 = _mm256_set1_epi64x(static_cast<long long>(kM61 - 1));
  return reduce_once(acc, m61, m61m1);
}

}  // namespace

void add_avx2(std::uint64_t* dst, const std::uint64_t* a,
              const std::uint64_t* b, std::size_t n, std::uint64_t q) {
  const __m256i qv = _mm256_set1_epi64x(static_cast<long long>(q));
  const __m256i qm1 = _mm256_set1_epi64x(static_cast<long long>(q - 1));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i s = reduce_once(_mm256_add_epi64(va, vb), qv, qm1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
  }
  for (; i < n; ++i) {
    std::uint64_t s = a[i] + b[i];
    dst[i] = s >= q ? s - q : s;
  }
}

void add_inplace_avx2(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t n, std::uint64_t q) {
  add_avx2(dst, dst, src, n, q);
}

void sub_inplace_avx2(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t n, std::uint64_t q) {
  const __m256i qv = _mm256_set1_epi64x(static_cast<long long>(q));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // a - b, plus q where b > a.
    __m256i lt = _mm256_cmpgt_epi64(vb, va);
    __m256i d = _mm256_sub_epi64(va, vb);
    d = _mm256_add_epi64(d, _mm256_and_si256(lt, qv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  for (; i < n; ++i) {
    std::uint64_t a = dst[i], b = src[i];
    dst[i] = a >= b ? a - b : a + q - b;
  }
}

void axpy_avx2_m61(std::uint64_t* dst, std::uint64_t c, const std::uint64_t* x,
                   std::size_t n) {
  if (c == 0) return;
  const __m256i cL = _mm256_set1_epi64x(static_cast<long long>(c & 0xffffffffULL));
  const __m256i cH = _mm256_set1_epi64x(static_cast<long long>(c >> 32));
  const __m256i m61 = _mm256_set1_epi64x(static_cast<long long>(kM61));
  const __m256i m61m1 = _mm256_set1_epi64x(static_cast<long long>(kM61 - 1));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i p = mulmod_m61(vx, cL, cH);
    __m256i s = reduce_once(_mm256_add_epi64(vd, p), m61, m61m1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
  }
  for (; i < n; ++i) {
    unsigned __int128 p = static_cast<unsigned __int128>(c) * x[i];
    std::uint64_t s = (static_cast<std::uint64_t>(p) & kM61) +
                      static_cast<std::uint64_t>(p >> 61);
    s = (s & kM61) + (s >> 61);
    if (s >= kM61) s -= kM61;
    s += dst[i];
    dst[i] = s >= kM61 ? s - kM61 : s;
  }
}

void scale_avx2_m61(std::uint64_t* dst, std::uint64_t c, std::size_t n) {
  const __m256i cL = _mm256_set1_epi64x(static_cast<long long>(c & 0xffffffffULL));
  const __m256i cH = _mm256_set1_epi64x(static_cast<long long>(c >> 32));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        mulmod_m61(vx, cL, cH));
  }
  for (; i < n; ++i) {
    unsigned __int128 p = static_cast<unsigned __int128>(c) * dst[i];
    std::uint64_t s = (static_cast<std::uint64_t>(p) & kM61) +
                      static_cast<std::uint64_t>(p >> 61);
    s = (s & kM61) + (s >> 61);
    dst[i] = s >= kM61 ? s - kM61 : s;
  }
}

}  // namespace gsa::kernels

#endif  // __x86_64__
