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

// AVX2/FMA variants. Compiled with -mavx2 -mfma; only ever called after the
// runtime CPU check in kernels.cpp. Per output element these perform the
// same FMA chain as the scalar reference, so results are bit-identical.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace ftc::kernels::detail {

void weighted_sum_avx2(double* dst, std::size_t n, const double* const* src,
                       const double* w, std::size_t count) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t c = 0; c < count; ++c) {
      const __m256d wv = _mm256_set1_pd(w[c]);
      acc = _mm256_fmadd_pd(wv, _mm256_loadu_pd(src[c] + i), acc);
    }
    _mm256_storeu_pd(dst + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t c = 0; c < count; ++c) {
      acc = std::fma(w[c], src[c][i], acc);
    }
    dst[i] = acc;
  }
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r =
        _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void axpy_to_avx2(double a, const double* x, const double* y, double* dst,
                  std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r =
        _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(dst + i, r);
  }
  for (; i < n; ++i) dst[i] = std::fma(a, x[i], y[i]);
}

}  // namespace ftc::kernels::detail
