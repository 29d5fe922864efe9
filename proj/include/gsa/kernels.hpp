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

#ifndef GSA_KERNELS_HPP_
#define GSA_KERNELS_HPP_

#include <cstddef>
#include <cstdint>

namespace gsa::kernels {

// Elementwise mod-q block operations over uint64_t residues (< q). These are
// the inner loops of masking, coded-key summation and unmasking; everything
// else in the library calls the dispatched front ends.
//
// Dispatch: add/sub vectorize for any q < 2^62; axpy/scale vectorize only for
// the Mersenne modulus 2^61-1 (shift-add reduction), and fall back to the
// scalar reference path otherwise or on CPUs without AVX2. The scalar
// reference kernels are exposed so equivalence tests can compare backends
// on identical inputs.

enum class Backend { Scalar, Avx2 };

/// Backend the dispatcher would pick for a multiply-type kernel at modulus q.
Backend active_backend(std::uint64_t q);

/// Test hook: force a backend (Scalar disables SIMD; Avx2 throws if the CPU
/// lacks it). Call with reset=true to restore auto dispatch.
void force_backend(Backend b, bool reset = false);

bool cpu_has_avx2();

// dst[i] = (a[i] + b[i]) mod q
void add(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
         std::size_t n, std::uint64_t q);
// dst[i] = (dst[i] + src[i]) mod q
void add_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                 std::uint64_t q);
// dst[i] = (dst[i] - src[i]) mod q
void sub_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                 std::uint64_t q);
// dst[i] = (dst[i] + c * x[i]) mod q
void axpy(std::uint64_t* dst, std::uint64_t c, const std::uint64_t* x,
          std::size_t n, std::uint64_t q);
// dst[i] = (c * dst[i]) mod q
void scale(std::uint64_t* dst, std::uint64_t c, std::size_t n, std::uint64_t q);

// Scalar reference implementations (always available).
void add_scalar(std::uint64_t* dst, const std::uint64_t* a,
                const std::uint64_t* b, std::size_t n, std::uint64_t q);
void add_inplace_scalar(std::uint64_t* dst, const std::uint64_t* src,
                        std::size_t n, std::uint64_t q);
void sub_inplace_scalar(std::uint64_t* dst, const std::uint64_t* src,
                        std::size_t n, std::uint64_t q);
void axpy_scalar(std::uint64_t* dst, std::uint64_t c, const std::uint64_t* x,
                 std::size_t n, std::uint64_t q);
void scale_scalar(std::uint64_t* dst, std::uint64_t c, std::size_t n,
                  std::uint64_t q);

#if defined(__x86_64__)
// AVX2 variants, compiled in a separate TU with -mavx2; callable only when
// cpu_has_avx2(). add/sub accept any q < 2^62; axpy/scale require q == 2^61-1.
void add_avx2(std::uint64_t* dst, const std::uint64_t* a,
              const std::uint64_t* b, std::size_t n, std::uint64_t q);
void add_inplace_avx2(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t n, std::uint64_t q);
void sub_inplace_avx2(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t n, std::uint64_t q);
void axpy_avx2_m61(std::uint64_t* dst, std::uint64_t c, const std::uint64_t* x,
                   std::size_t n);
void scale_avx2_m61(std::uint64_t* dst, std::uint64_t c, std::size_t n);
#endif

}  // namespace gsa::kernels

#endif  // GSA_KERNELS_HPP_
