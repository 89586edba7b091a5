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

#include "lwi/kernels.hpp"

namespace lwi::kernels::detail {

void applyScalar(const Complex* op, const Complex* x, Complex* y) {
  for (int i = 0; i < kDim; ++i) y[i] = Complex(0.0, 0.0);
  for (int j = 0; j < kDim; ++j) {
    const Complex xj = x[j];
    const Complex* col = op + j * kDim;
    for (int i = 0; i < kDim; ++i) y[i] += col[i] * xj;
  }
}

void rk4StepScalar(const Complex* op, Complex* v, double h) {
  Complex k1[kDim], k2[kDim], k3[kDim], k4[kDim], tmp[kDim];
  applyScalar(op, v, k1);
  for (int i = 0; i < kDim; ++i) tmp[i] = v[i] + (0.5 * h) * k1[i];
  applyScalar(op, tmp, k2);
  for (int i = 0; i < kDim; ++i) tmp[i] = v[i] + (0.5 * h) * k2[i];
  applyScalar(op, tmp, k3);
  for (int i = 0; i < kDim; ++i) tmp[i] = v[i] + h * k3[i];
  applyScalar(op, tmp, k4);
  const double w = h / 6.0;
  for (int i = 0; i < kDim; ++i) v[i] += w * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
}

}  // namespace lwi::kernels::detail
