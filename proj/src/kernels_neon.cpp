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

// NEON variants (aarch64 baseline). Same FMA chain per element as the
// scalar reference; results are bit-identical.

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

namespace ftc::kernels::detail {

void weighted_sum_neon(double* dst, std::size_t n, const double* const* src,
                       const double* w, std::size_t count) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t c = 0; c < count; ++c) {
      acc = vfmaq_n_f64(acc, vld1q_f64(src[c] + i), w[c]);
    }
    vst1q_f64(dst + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t c = 0; c < count; ++c) {
      acc = std::fma(w[c], src[c][i], acc);
    }
    dst[i] = acc;
  }
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_n_f64(vld1q_f64(y + i), vld1q_f64(x + i), a));
  }
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void axpy_to_neon(double a, const double* x, const double* y, double* dst,
                  std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vfmaq_n_f64(vld1q_f64(y + i), vld1q_f64(x + i), a));
  }
  for (; i < n; ++i) dst[i] = std::fma(a, x[i], y[i]);
}

}  // namespace ftc::kernels::detail
