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

#include "lwi/solve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lwi/analysis.hpp"
#include "lwi/errors.hpp"
#include "lwi/liouville.hpp"

namespace lwi {

namespace {

constexpr double kPositivityFloor = -1e-6;
constexpr double kTraceDriftTol = 1e-9;

void requireHermitian(const OperatorMatrix& h) {
  const double err = hermiticityError(h);
  if (!(err <= 1e-12)) {
    std::ostringstream os;
    os << "Hamiltonian is not Hermitian (max |H - H^dag| = " << err << ")";
    throw ContractError(os.str());
  }
}

double minEigenvalue(const OperatorMatrix& rho) {
  const OperatorMatrix h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

SteadyStateResult steadyState(const SystemParams& p) {
  const Superoperator l = buildLiouvillian(p);

  int replaced = vecIndex(0, 0);
  for (int k = 1; k < kLevels; ++k) {
    const int row = vecIndex(k, k);
    if (std::abs(l(row, row)) < std::abs(l(replaced, replaced))) replaced = row;
  }

  Superoperator bordered = l;
  bordered.row(replaced) = traceFunctional();
  LiouvilleVector rhs = LiouvilleVector::Zero();
  rhs(replaced) = 1.0;

  const Eigen::FullPivLU<Superoperator> lu(bordered);
  if (!lu.isInvertible()) {
    std::ostringstream os;
    os << "steady state is not unique: bordered Liouvillian has rank " << lu.rank() << " of "
       << kLiouvilleDim;
    throw DegenerateError(os.str());
  }

  SteadyStateResult out;
  out.replaced_row = replaced;
  const double rcond = lu.rcond();
  out.condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  out.rho = DensityMatrix(unvec(LiouvilleVector(lu.solve(rhs)))).hermitized();
  out.residual = (l * vec(out.rho)).cwiseAbs().maxCoeff();
  if (!(out.residual <= kSteadyStateResidualTol)) {
    std::ostringstream os;
    os << "steady-state residual " << out.residual << " exceeds " << kSteadyStateResidualTol
       << " (condition " << out.condition << ")";
    throw ConvergenceError(os.str(), out.residual);
  }
  return out;
}

double rateScale(const SystemParams& p) {
  const double s = std::max({std::abs(p.delta1), std::abs(p.delta2), p.omega, p.g, p.gamma_a(),
                             p.gamma_bd + p.r_bd, p.gamma_cd + p.r_cd, p.r_bd + p.r_cd});
  return s > 0.0 ? s : 1.0;
}

double recommendedStep(const SystemParams& p) { return 0.1 / rateScale(p); }

double minNonzeroRate(const SystemParams& p) {
  double m = 0.0;
  for (double r : {p.gamma_ab, p.gamma_ac, p.gamma_bd, p.gamma_cd, p.r_bd, p.r_cd}) {
    if (r > 0.0 && (m == 0.0 || r < m)) m = r;
  }
  return m;
}

Trajectory timeEvolve(const SystemParams& p, const DensityMatrix& rho0, double t_final, double dt,
                      const EvolveOptions& options) {
  if (!(dt > 0.0)) throw DomainError("time step must be > 0");
  if (!(t_final >= 0.0)) throw DomainError("final time must be >= 0");

  const kernels::KernelTable& k = options.kernels ? *options.kernels : kernels::activeKernels();
  const Superoperator l = buildLiouvillian(p);

  const std::size_t steps =
      t_final == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(t_final / dt - 1e-12));
  const double h = steps == 0 ? 0.0 : t_final / static_cast<double>(steps);
  std::size_t every = options.sample_every;
  if (every == 0) every = std::max<std::size_t>(1, steps / 100);

  Trajectory traj;
  const Complex trace0 = rho0.trace();
  LiouvilleVector v = vec(rho0);

  auto record = [&](std::size_t step) {
    const OperatorMatrix m = unvec(v);
    if (!m.allFinite()) {
      throw InstabilityError("state became non-finite; reduce the time step");
    }
    const double drift = std::abs(m.trace() - trace0);
    traj.max_trace_drift = std::max(traj.max_trace_drift, drift);
    if (drift > kTraceDriftTol) {
      std::ostringstream os;
      os << "trace drifted by " << drift << " at t = " << static_cast<double>(step) * h
         << "; reduce the time step";
      throw InstabilityError(os.str());
    }
    const double min_eig = minEigenvalue(m);
    if (min_eig < kPositivityFloor) {
      std::ostringstream os;
      os << "density matrix lost positivity (min eigenvalue " << min_eig
         << ") at t = " << static_cast<double>(step) * h << "; reduce the time step (dt = " << h
         << ")";
      throw InstabilityError(os.str());
    }
    traj.times.push_back(static_cast<double>(step) * h);
    traj.states.emplace_back(m);
  };

  record(0);
  for (std::size_t s = 1; s <= steps; ++s) {
    k.rk4_step(l.data(), v.data(), h);
    if (s % every == 0 || s == steps) record(s);
  }
  if (steps > 0) traj.times.back() = t_final;
  return traj;
}

OperatorMatrix unitaryPropagator(const OperatorMatrix& h, double t) {
  requireHermitian(h);
  const Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(0.5 * (h + h.adjoint()));
  StateVector phases;
  for (int k = 0; k < kLevels; ++k) phases(k) = std::exp(Complex(0.0, -es.eigenvalues()(k) * t));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

StateVector unitaryEvolve(const OperatorMatrix& h, const StateVector& psi0, double t) {
  if (!(std::abs(psi0.norm() - 1.0) <= 1e-10)) {
    throw ContractError("initial state must be normalized");
  }
  return unitaryPropagator(h, t) * psi0;
}

TripodAmplitudes decomposeInitialState(const StateVector& psi0, const TripodEigenSystem& eig) {
  if (std::abs(psi0(index(Level::d))) > 1e-12) {
    throw DomainError("initial state has a |d> component; the tripod basis spans {a, b, c}");
  }
  return {eig.plus_state.dot(psi0), eig.minus_state.dot(psi0), eig.dark_state.dot(psi0)};
}

}  // namespace lwi
