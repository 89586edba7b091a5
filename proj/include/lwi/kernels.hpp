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

#pragma once

// Dense 16x16 complex kernels behind the time integrator.
//
// Every kernel exists as a scalar reference and, where the target allows, a
// SIMD variant. The variant is picked once at runtime from CPU features; set
// LWI_KERNEL=scalar (or avx2) in the environment to force one. Operators are
// Eigen column-major storage: op[row + 16 * col].

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace lwi::kernels {

using Complex = std::complex<double>;

inline constexpr int kDim = 16;

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  const char* name;
  /// y = op * x.
  void (*apply)(const Complex* op, const Complex* x, Complex* y);
  /// One classical RK4 step of dv/dt = op * v with step h, in place.
  void (*rk4_step)(const Complex* op, Complex* v, double h);
};

const KernelTable& scalarKernels() noexcept;

/// True when the SIMD variant was compiled in and the CPU can run it.
bool avx2Available() noexcept;

/// Throws lwi::Error if the variant is unavailable on this machine.
const KernelTable& kernelsFor(Isa isa);

/// All variants runnable here, scalar first.
std::vector<const KernelTable*> availableKernels();

/// The dispatched table (resolved on first use).
const KernelTable& activeKernels();

std::string_view isaName(Isa isa) noexcept;

namespace detail {
void applyScalar(const Complex* op, const Complex* x, Complex* y);
void rk4StepScalar(const Complex* op, Complex* v, double h);
#if defined(LWI_HAVE_AVX2)
void applyAvx2(const Complex* op, const Complex* x, Complex* y);
void rk4StepAvx2(const Complex* op, Complex* v, double h);
#endif
}  // namespace detail

}  // namespace lwi::kernels
