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

#include <cstddef>
#include <vector>

#include "lwi/kernels.hpp"
#include "lwi/model.hpp"

namespace lwi {

struct TripodEigenSystem;

struct SteadyStateResult {
  DensityMatrix rho;
  double residual = 0.0;   // max-norm of L vec(rho)
  double condition = 0.0;  // 1 / rcond of the bordered system
  int replaced_row = 0;    // population row swapped for the trace constraint
};

inline constexpr double kSteadyStateResidualTol = 1e-10;

/// Solves L vec(rho) = 0 with Tr rho = 1 by overwriting the population row with
/// the smallest |diagonal| by the trace functional. Throws DegenerateError when
/// the bordered system is singular (no unique steady state) and
/// ConvergenceError when the residual exceeds kSteadyStateResidualTol.
SteadyStateResult steadyState(const SystemParams& p);

/// Largest magnitude among detunings, couplings and total channel rates.
double rateScale(const SystemParams& p);

/// 0.1 / rateScale(p).
double recommendedStep(const SystemParams& p);

/// Smallest strictly positive damping/pump rate (0 when there is none).
double minNonzeroRate(const SystemParams& p);

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;  // states.back() is the state at t_final
  double max_trace_drift = 0.0;
  const DensityMatrix& final() const { return states.back(); }
};

struct EvolveOptions {
  /// Steps between stored samples; 0 picks about 100 samples.
  std::size_t sample_every = 0;
  /// Kernel table; nullptr uses the dispatched one.
  const kernels::KernelTable* kernels = nullptr;
};

/// Fixed-step classical RK4 on d vec(rho)/dt = L vec(rho). The step is
/// shrunk to t_final / ceil(t_final / dt) so the run ends exactly at t_final.
/// Throws InstabilityError if a sample loses positivity (min eigenvalue below
/// -1e-6), goes non-finite, or the trace drifts by more than 1e-9.
Trajectory timeEvolve(const SystemParams& p, const DensityMatrix& rho0, double t_final,
                      double dt, const EvolveOptions& options = {});

/// exp(-i H t) via the eigendecomposition of H. Throws ContractError if H is
/// not Hermitian to 1e-12.
OperatorMatrix unitaryPropagator(const OperatorMatrix& h, double t);

/// exp(-i H t) psi0. Throws ContractError for non-Hermitian H or a psi0 whose
/// norm is off by more than 1e-10.
StateVector unitaryEvolve(const OperatorMatrix& h, const StateVector& psi0, double t);

struct TripodAmplitudes {
  Complex plus;   // <E+|psi>
  Complex minus;  // <E-|psi>
  Complex zero;   // <E0|psi>
};

/// Projects an {a, b, c} state onto the tripod eigenbasis. Throws DomainError
/// if psi0 has a |d> amplitude above 1e-12.
TripodAmplitudes decomposeInitialState(const StateVector& psi0, const TripodEigenSystem& eig);

}  // namespace lwi
