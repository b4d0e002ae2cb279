// Copyright 2026 The ftc authors
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

#ifndef FTC_KERNELS_HPP_
#define FTC_KERNELS_HPP_

#include <cstddef>
#include <string>

namespace ftc::kernels {

// Vector kernels behind the mixing/simulation inner loops. Every
// implementation (scalar, AVX2, NEON) must produce bit-identical results:
// per output element the accumulation is a chain of fused multiply-adds in
// a fixed order, so the lane width never changes the rounding. The scalar
// reference uses std::fma to match the SIMD FMA contraction exactly.

enum class Isa { scalar, avx2, neon };

// ISA selected at startup (CPU detection, overridable with FTC_SIMD=scalar).
Isa active();
const char* isa_name(Isa isa);

// Force a specific implementation; throws std::invalid_argument if the ISA
// is not available on this machine. Intended for equivalence tests.
void force(Isa isa);

// dst[i] = sum_c w[c] * src[c][i]   for i in [0, n)
// FMA chain over c in ascending order; dst must not alias any src row.
void weighted_sum(double* dst, std::size_t n, const double* const* src,
                  const double* w, std::size_t count);

// y[i] = fma(a, x[i], y[i])
void axpy(double a, const double* x, double* y, std::size_t n);

// dst[i] = fma(a, x[i], y[i]); dst may alias x or y.
void axpy_to(double a, const double* x, const double* y, double* dst,
             std::size_t n);

}  // namespace ftc::kernels

#endif  // FTC_KERNELS_HPP_
