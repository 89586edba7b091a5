// Copyright 2026 The LWI Simulator Authors
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

// Compiled with -mavx2 -mfma; only reached through the dispatcher after a
// CPU feature check.

#include <immintrin.h>

#include "lwi/kernels.hpp"

namespace lwi::kernels::detail {

namespace {

// One __m256d holds two complex numbers as (re0, im0, re1, im1).
constexpr int kLanes = kDim / 2;

inline const double* raw(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(Complex* p) { return reinterpret_cast<double*>(p); }

// y = op * x with the result kept in registers.
inline void applyRegs(const Complex* op, const Complex* x, __m256d (&y)[kLanes]) {
  // Real-part and swapped-product accumulators; combined with addsub at the end:
  //   (a_re + i a_im)(x_re + i x_im) = (a_re x_re - a_im x_im) + i (a_im x_re + a_re x_im)
  __m256d acc_re[kLanes];
  __m256d acc_im[kLanes];
  for (int k = 0; k < kLanes; ++k) {
    acc_re[k] = _mm256_setzero_pd();
    acc_im[k] = _mm256_setzero_pd();
  }
  for (int j = 0; j < kDim; ++j) {
    const __m256d xr = _mm256_set1_pd(x[j].real());
    const __m256d xi = _mm256_set1_pd(x[j].imag());
    const double* col = raw(op + j * kDim);
    for (int k = 0; k < kLanes; ++k) {
      const __m256d a = _mm256_loadu_pd(col + 4 * k);
      const __m256d a_swap = _mm256_permute_pd(a, 0b0101);
      acc_re[k] = _mm256_fmadd_pd(a, xr, acc_re[k]);
      acc_im[k] = _mm256_fmadd_pd(a_swap, xi, acc_im[k]);
    }
  }
  for (int k = 0; k < kLanes; ++k) y[k] = _mm256_addsub_pd(acc_re[k], acc_im[k]);
}

}  // namespace

void applyAvx2(const Complex* op, const Complex* x, Complex* y) {
  __m256d out[kLanes];
  applyRegs(op, x, out);
  for (int k = 0; k < kLanes; ++k) _mm256_storeu_pd(raw(y) + 4 * k, out[k]);
}

void rk4StepAvx2(const Complex* op, Complex* v, double h) {
  alignas(32) Complex tmp[kDim];
  __m256d v0[kLanes], k[kLanes], sum[kLanes];
  for (int l = 0; l < kLanes; ++l) v0[l] = _mm256_loadu_pd(raw(v) + 4 * l);

  const __m256d half_h = _mm256_set1_pd(0.5 * h);
  const __m256d full_h = _mm256_set1_pd(h);
  const __m256d two = _mm256_set1_pd(2.0);

  // k1
  applyRegs(op, v, k);
  for (int l = 0; l < kLanes; ++l) {
    sum[l] = k[l];
    _mm256_store_pd(raw(tmp) + 4 * l, _mm256_fmadd_pd(half_h, k[l], v0[l]));
  }
  // k2
  applyRegs(op, tmp, k);
  for (int l = 0; l < kLanes; ++l) {
    sum[l] = _mm256_fmadd_pd(two, k[l], sum[l]);
    _mm256_store_pd(raw(tmp) + 4 * l, _mm256_fmadd_pd(half_h, k[l], v0[l]));
  }
  // k3
  applyRegs(op, tmp, k);
  for (int l = 0; l < kLanes; ++l) {
    sum[l] = _mm256_fmadd_pd(two, k[l], sum[l]);
    _mm256_store_pd(raw(tmp) + 4 * l, _mm256_fmadd_pd(full_h, k[l], v0[l]));
  }
  // k4
  applyRegs(op, tmp, k);
  const __m256d w = _mm256_set1_pd(h / 6.0);
  for (int l = 0; l < kLanes; ++l) {
    sum[l] = _mm256_add_pd(sum[l], k[l]);
    _mm256_storeu_pd(raw(v) + 4 * l, _mm256_fmadd_pd(w, sum[l], v0[l]));
  }
}

}  // namespace lwi::kernels::detail
