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

#include "ftc/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace ftc::kernels {

namespace detail {

void weighted_sum_scalar(double* dst, std::size_t n, const double* const* src,
                         const double* w, std::size_t count) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t c = 0; c < count; ++c) {
      acc = std::fma(w[c], src[c][i], acc);
    }
    dst[i] = acc;
  }
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void axpy_to_scalar(double a, const double* x, const double* y, double* dst,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = std::fma(a, x[i], y[i]);
}

#if defined(FTC_WITH_AVX2)
void weighted_sum_avx2(double* dst, std::size_t n, const double* const* src,
                       const double* w, std::size_t count);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void axpy_to_avx2(double a, const double* x, const double* y, double* dst,
                  std::size_t n);
#endif
#if defined(FTC_WITH_NEON)
void weighted_sum_neon(double* dst, std::size_t n, const double* const* src,
                       const double* w, std::size_t count);
void axpy_neon(double a, const double* x, double* y, std::size_t n);
void axpy_to_neon(double a, const double* x, const double* y, double* dst,
                  std::size_t n);
#endif

using WeightedSumFn = void (*)(double*, std::size_t, const double* const*,
                               const double*, std::size_t);
using AxpyFn = void (*)(double, const double*, double*, std::size_t);
using AxpyToFn = void (*)(double, const double*, const double*, double*,
                          std::size_t);

struct Dispatch {
  Isa isa = Isa::scalar;
  WeightedSumFn weighted_sum = weighted_sum_scalar;
  AxpyFn axpy = axpy_scalar;
  AxpyToFn axpy_to = axpy_to_scalar;
};

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(FTC_WITH_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(FTC_WITH_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Dispatch make_dispatch(Isa isa) {
  Dispatch d;
  d.isa = isa;
  switch (isa) {
    case Isa::scalar:
      break;
#if defined(FTC_WITH_AVX2)
    case Isa::avx2:
      d.weighted_sum = weighted_sum_avx2;
      d.axpy = axpy_avx2;
      d.axpy_to = axpy_to_avx2;
      break;
#endif
#if defined(FTC_WITH_NEON)
    case Isa::neon:
      d.weighted_sum = weighted_sum_neon;
      d.axpy = axpy_neon;
      d.axpy_to = axpy_to_neon;
      break;
#endif
    default:
      break;
  }
  return d;
}

Isa detect() {
  if (const char* env = std::getenv("FTC_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0 && isa_supported(Isa::avx2))
      return Isa::avx2;
    if (std::strcmp(env, "neon") == 0 && isa_supported(Isa::neon))
      return Isa::neon;
  }
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Dispatch& dispatch() {
  static Dispatch d = make_dispatch(detect());
  return d;
}

}  // namespace detail

Isa active() { return detail::dispatch().isa; }

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "?";
}

void force(Isa isa) {
  if (!detail::isa_supported(isa)) {
    throw std::invalid_argument(std::string("simd isa not available: ") +
                                isa_name(isa));
  }
  detail::dispatch() = detail::make_dispatch(isa);
}

void weighted_sum(double* dst, std::size_t n, const double* const* src,
                  const double* w, std::size_t count) {
  detail::dispatch().weighted_sum(dst, n, src, w, count);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  detail::dispatch().axpy(a, x, y, n);
}

void axpy_to(double a, const double* x, const double* y, double* dst,
             std::size_t n) {
  detail::dispatch().axpy_to(a, x, y, dst, n);
}

}  // namespace ftc::kernels
