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

#include "lwi/model.hpp"

#include <cmath>
#include <sstream>

#include "lwi/errors.hpp"

namespace lwi {

const char* levelName(Level l) noexcept {
  switch (l) {
    case Level::a:
      return "a";
    case Level::b:
      return "b";
    case Level::c:
      return "c";
    case Level::d:
      return "d";
  }
  return "?";
}

namespace {

std::optional<double> photonNumber(double rate, double gamma) {
  if (gamma > 0.0) return rate / gamma;
  return std::nullopt;
}

double require(const std::optional<double>& v, const char* name) {
  if (!v) throw ValidationError(name, std::string("missing field '") + name + "'");
  if (!std::isfinite(*v)) {
    throw ValidationError(name, std::string("field '") + name + "' is not finite");
  }
  return *v;
}

void requireNonNegative(double v, const char* name) {
  if (!(v >= 0.0)) {
    std::ostringstream os;
    os << "field '" << name << "' must be >= 0 (got " << v << ")";
    throw ValidationError(name, os.str());
  }
}

// Resolves one pump channel from either its rate or its photon number.
double pumpRate(const std::optional<double>& rate, const std::optional<double>& photons,
                double gamma, const char* rate_name, const char* photon_name) {
  if (rate && photons) {
    throw ConflictError(rate_name, std::string("both '") + rate_name + "' and '" +
                                       photon_name + "' given for one pump channel");
  }
  if (photons) {
    const double n = require(photons, photon_name);
    requireNonNegative(n, photon_name);
    if (n > 0.0 && gamma == 0.0) {
      throw IllDefinedPumpError(photon_name, std::string("'") + photon_name +
                                                 "' > 0 with zero spontaneous rate: "
                                                 "pump rate R = n * gamma is ill-defined");
    }
    return n * gamma;
  }
  if (rate) {
    const double r = require(rate, rate_name);
    requireNonNegative(r, rate_name);
    return r;
  }
  return 0.0;
}

}  // namespace

std::optional<double> SystemParams::n_bd() const { return photonNumber(r_bd, gamma_bd); }
std::optional<double> SystemParams::n_cd() const { return photonNumber(r_cd, gamma_cd); }

SystemParams validateParams(const RawParams& raw) {
  SystemParams p;
  p.omega = require(raw.omega, "omega");
  p.g = require(raw.g, "g");
  p.delta1 = require(raw.delta1, "delta1");
  p.delta2 = require(raw.delta2, "delta2");
  p.gamma_ab = require(raw.gamma_ab, "gamma_ab");
  p.gamma_ac = require(raw.gamma_ac, "gamma_ac");
  p.gamma_bd = require(raw.gamma_bd, "gamma_bd");
  p.gamma_cd = require(raw.gamma_cd, "gamma_cd");
  requireNonNegative(p.omega, "omega");
  requireNonNegative(p.g, "g");
  requireNonNegative(p.gamma_ab, "gamma_ab");
  requireNonNegative(p.gamma_ac, "gamma_ac");
  requireNonNegative(p.gamma_bd, "gamma_bd");
  requireNonNegative(p.gamma_cd, "gamma_cd");
  p.r_bd = pumpRate(raw.r_bd, raw.n_bd, p.gamma_bd, "r_bd", "n_bd");
  p.r_cd = pumpRate(raw.r_cd, raw.n_cd, p.gamma_cd, "r_cd", "n_cd");
  p.unit_label = raw.unit_label;
  return p;
}

void validate(const SystemParams& p) {
  RawParams raw;
  raw.omega = p.omega;
  raw.g = p.g;
  raw.delta1 = p.delta1;
  raw.delta2 = p.delta2;
  raw.gamma_ab = p.gamma_ab;
  raw.gamma_ac = p.gamma_ac;
  raw.gamma_bd = p.gamma_bd;
  raw.gamma_cd = p.gamma_cd;
  raw.r_bd = p.r_bd;
  raw.r_cd = p.r_cd;
  validateParams(raw);
}

DensityMatrix DensityMatrix::pure(Level l) {
  OperatorMatrix m = OperatorMatrix::Zero();
  m(index(l), index(l)) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::fromState(const StateVector& psi) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) throw DomainError("cannot build a density matrix from a zero state");
  return DensityMatrix(psi * psi.adjoint() / n2);
}

DensityMatrix DensityMatrix::maximallyMixed() {
  return DensityMatrix(OperatorMatrix::Identity() / static_cast<double>(kLevels));
}

DensityMatrix DensityMatrix::hermitized() const {
  return DensityMatrix(0.5 * (rho_ + rho_.adjoint()));
}

double hermiticityError(const OperatorMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::string PhysicalityReport::describe() const {
  std::ostringstream os;
  os.precision(3);
  os << "hermiticity error " << hermiticity_error << ", trace error " << trace_error
     << ", min eigenvalue " << min_eigenvalue << (ok ? " (physical)" : " (NOT physical)");
  return os.str();
}

PhysicalityReport checkPhysical(const DensityMatrix& rho, const PhysicalTolerance& tol) {
  PhysicalityReport r;
  const OperatorMatrix& m = rho.matrix();
  r.hermiticity_error = hermiticityError(m);
  r.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  const OperatorMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(h, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.ok = r.hermiticity_error <= tol.hermitian && r.trace_error <= tol.trace &&
         r.min_eigenvalue >= tol.min_eigenvalue && m.allFinite();
  return r;
}

void assertPhysical(const DensityMatrix& rho, const PhysicalTolerance& tol) {
  const PhysicalityReport r = checkPhysical(rho, tol);
  if (!r.ok) throw Error("density matrix is not physical: " + r.describe());
}

}  // namespace lwi
