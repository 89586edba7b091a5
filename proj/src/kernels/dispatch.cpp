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

#include <cstdlib>
#include <string>

#include "lwi/errors.hpp"
#include "lwi/kernels.hpp"

namespace lwi::kernels {

namespace {

const KernelTable kScalar{Isa::kScalar, "scalar", &detail::applyScalar,
                          &detail::rk4StepScalar};

#if defined(LWI_HAVE_AVX2)
const KernelTable kAvx2{Isa::kAvx2, "avx2", &detail::applyAvx2, &detail::rk4StepAvx2};
#endif

const KernelTable& resolve() {
  if (const char* forced = std::getenv("LWI_KERNEL")) {
    const std::string name(forced);
    if (name == "scalar") return kScalar;
    if (name == "avx2") return kernelsFor(Isa::kAvx2);
    throw Error("LWI_KERNEL must be 'scalar' or 'avx2', got '" + name + "'");
  }
  if (avx2Available()) return kernelsFor(Isa::kAvx2);
  return kScalar;
}

}  // namespace

const KernelTable& scalarKernels() noexcept { return kScalar; }

bool avx2Available() noexcept {
#if defined(LWI_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& kernelsFor(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return kScalar;
    case Isa::kAvx2:
#if defined(LWI_HAVE_AVX2)
      if (avx2Available()) return kAvx2;
#endif
      throw Error("avx2 kernels are not available on this machine");
  }
  throw Error("unknown kernel isa");
}

std::vector<const KernelTable*> availableKernels() {
  std::vector<const KernelTable*> out{&kScalar};
#if defined(LWI_HAVE_AVX2)
  if (avx2Available()) out.push_back(&kAvx2);
#endif
  return out;
}

const KernelTable& activeKernels() {
  static const KernelTable& table = resolve();
  return table;
}

std::string_view isaName(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace lwi::kernels
