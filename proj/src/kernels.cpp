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

#include "gsa/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include "gsa/field.hpp"

namespace gsa::kernels {

namespace {

constexpr std::uint64_t kM61 = PrimeField::kMersenne61;

enum class Mode : int { Auto = 0, ForceScalar = 1, ForceAvx2 = 2 };
std::atomic<Mode> g_mode{Mode::Auto};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  if (q == kM61) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t s = (static_cast<std::uint64_t>(p) & kM61) +
                      static_cast<std::uint64_t>(p >> 61);
    s = (s & kM61) + (s >> 61);
    return s >= kM61 ? s - kM61 : s;
  }
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

inline bool use_avx2() {
#if defined(__x86_64__)
  Mode m = g_mode.load(std::memory_order_relaxed);
  if (m == Mode::ForceScalar) return false;
  if (m == Mode::ForceAvx2) return true;
  return cpu_has_avx2();
#else
  return false;
#endif
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__)
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

Backend active_backend(std::uint64_t q) {
  return (q == kM61 && use_avx2()) ? Backend::Avx2 : Backend::Scalar;
}

void force_backend(Backend b, bool reset) {
  if (reset) {
    g_mode.store(Mode::Auto, std::memory_order_relaxed);
    return;
  }
  if (b == Backend::Avx2) {
    if (!cpu_has_avx2()) throw std::runtime_error("force_backend: CPU lacks AVX2");
    g_mode.store(Mode::ForceAvx2, std::memory_order_relaxed);
  } else {
    g_mode.store(Mode::ForceScalar, std::memory_order_relaxed);
  }
}

void add_scalar(std::uint64_t* dst, const std::uint64_t* a,
                const std::uint64_t* b, std::size_t n, std::uint64_t q) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = a[i] + b[i];
    dst[i] = s >= q ? s - q : s;
  }
}

void add_inplace_scalar(std::uint64_t* dst, const std::uint64_t* src,
                        std::size_t n, std::uint64_t q) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = dst[i] + src[i];
    dst[i] = s >= q ? s - q : s;
  }
}

void sub_inplace_scalar(std::uint64_t* dst, const std::uint64_t* src,
                        std::size_t n, std::uint64_t q) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t d = dst[i];
    std::uint64_t s = src[i];
    dst[i] = d >= s ? d - s : d + q - s;
  }
}

void axpy_scalar(std::uint64_t* dst, std::uint64_t c, const std::uint64_t* x,
                 std::size_t n, std::uint64_t q) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = dst[i] + mulmod(c, x[i], q);
    dst[i] = s >= q ? s - q : s;
  }
}

void scale_scalar(std::uint64_t* dst, std::uint64_t c, std::size_t n,
                  std::uint64_t q) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = mulmod(c, dst[i], q);
}

void add(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
         std::size_t n, std::uint64_t q) {
#if defined(__x86_64__)
  if (use_avx2()) {
    add_avx2(dst, a, b, n, q);
    return;
  }
#endif
  add_scalar(dst, a, b, n, q);
}

void add_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                 std::uint64_t q) {
#if defined(__x86_64__)
  if (use_avx2()) {
    add_inplace_avx2(dst, src, n, q);
    return;
  }
#endif
  add_inplace_scalar(dst, src, n, q);
}

void sub_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                 std::uint64_t q) {
#if defined(__x86_64__)
  if (use_avx2()) {
    sub_inplace_avx2(dst, src, n, q);
    return;
  }
#endif
  sub_inplace_scalar(dst, src, n, q);
}

void axpy(std::uint64_t* dst, std::uint64_t c, const std::uint64_t* x,
          std::size_t n, std::uint64_t q) {
#if defined(__x86_64__)
  if (q == kM61 && use_avx2()) {
    axpy_avx2_m61(dst, c, x, n);
    return;
  }
#endif
  axpy_scalar(dst, c, x, n, q);
}

void scale(std::uint64_t* dst, std::uint64_t c, std::size_t n, std::uint64_t q) {
#if defined(__x86_64__)
  if (q == kM61 && use_avx2()) {
    scale_avx2_m61(dst, c, n);
    return;
  }
#endif
  scale_scalar(dst, c, n, q);
}

}  // namespace gsa::kernels
