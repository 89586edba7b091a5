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

#include "lwi/analysis.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lwi/errors.hpp"
#include "lwi/liouville.hpp"

namespace lwi {

namespace {

constexpr int A = index(Level::a);
constexpr int B = index(Level::b);
constexpr int C = index(Level::c);

void requireResonantDomain(const SystemParams& p, const char* op) {
  if (p.delta1 != 0.0 || p.delta2 != 0.0 || p.r_bd != 0.0) {
    std::ostringstream os;
    os << op << " requires delta1 = delta2 = 0 and r_bd = 0 (got delta1 = " << p.delta1
       << ", delta2 = " << p.delta2 << ", r_bd = " << p.r_bd << ")";
    throw DomainError(os.str());
  }
}

double resonantDenominator(const SystemParams& p) {
  const double rcd = p.r_cd, gcd = p.gamma_cd, gbd = p.gamma_bd, gab = p.gamma_ab;
  return (2.0 * rcd + gcd) * gbd + rcd * (gbd + gab) + gbd * gab;
}

double quadratic(const StateVector& v, const OperatorMatrix& rho) {
  return v.dot(rho * v).real();
}

}  // namespace

ProbeResponse probeResponse(const DensityMatrix& rho) {
  const Complex ba = rho(Level::b, Level::a);
  return {ba.imag(), ba.real(), rho(Level::b, Level::c).real()};
}

double analyticResonantGain(const SystemParams& p) {
  requireResonantDomain(p, "analyticResonantGain");
  const double den = p.omega * p.omega * resonantDenominator(p);
  if (den == 0.0) throw DegenerateError("analyticResonantGain: denominator vanishes");
  const double s = p.gamma_cd + p.gamma_bd + p.r_cd;
  const double num =
      p.g * p.r_cd * (s * (p.gamma_bd - p.gamma_ab) + p.gamma_bd * (p.gamma_ac + p.gamma_ab));
  return num / den;
}

double resonantGainBound(const SystemParams& p) {
  const double s = p.gamma_cd + p.gamma_bd + p.r_cd;
  if (s == 0.0) return std::numeric_limits<double>::infinity();
  return p.gamma_bd * (p.gamma_ac + p.gamma_ab) / s;
}

bool gainConditionResonant(const SystemParams& p) {
  requireResonantDomain(p, "gainConditionResonant");
  if (p.omega * p.omega * resonantDenominator(p) == 0.0) {
    throw DegenerateError("gainConditionResonant: denominator vanishes");
  }
  // Gain needs a probe and a pump at all; then either branch of the decay
  // condition. gamma_ab == gamma_bd belongs to the gain side.
  if (!(p.g > 0.0 && p.r_cd > 0.0)) return false;
  const double excess = p.gamma_ab - p.gamma_bd;
  return p.gamma_bd > p.gamma_ab || (excess >= 0.0 && excess < resonantGainBound(p));
}

Populations analyticResonantPopulations(const SystemParams& p) {
  requireResonantDomain(p, "analyticResonantPopulations");
  const double den = resonantDenominator(p);
  if (den == 0.0) throw DegenerateError("analyticResonantPopulations: denominator vanishes");
  Populations out;
  out.aa = p.gamma_bd * p.r_cd / den;
  out.cc = out.aa;
  out.bb = p.gamma_ab * p.r_cd / den;
  out.dd = p.gamma_bd * (p.r_cd + p.gamma_cd + p.gamma_ab) / den;
  return out;
}

AutlerTownesBasis autlerTownes(const SystemParams& p) {
  if (!(p.omega > 0.0)) throw DegenerateError("Autler-Townes basis needs omega > 0");
  const double d = p.delta1;
  const double root = std::hypot(d, p.omega);
  const double w2 = p.omega * p.omega;

  AutlerTownesBasis at;
  // lambda+ lambda- = -omega^2 / 4; take the root without cancellation first.
  if (d >= 0.0) {
    at.lambda_minus = 0.5 * (d + root);
    at.lambda_plus = -w2 / (4.0 * at.lambda_minus);
  } else {
    at.lambda_plus = 0.5 * (d - root);
    at.lambda_minus = -w2 / (4.0 * at.lambda_plus);
  }
  at.theta_plus = std::atan(-p.omega / (2.0 * at.lambda_plus));
  at.theta_minus = std::atan(-p.omega / (2.0 * at.lambda_minus));

  at.plus_state = StateVector::Zero();
  at.plus_state(A) = std::sin(at.theta_plus);
  at.plus_state(C) = std::cos(at.theta_plus);
  at.minus_state = StateVector::Zero();
  at.minus_state(A) = std::sin(at.theta_minus);
  at.minus_state(C) = std::cos(at.theta_minus);
  return at;
}

DressedPopulations dressedPopulations(const DensityMatrix& rho, const AutlerTownesBasis& basis) {
  return {quadratic(basis.plus_state, rho.matrix()), quadratic(basis.minus_state, rho.matrix())};
}

OperatorMatrix tripodFrameHamiltonian(const SystemParams& p) {
  OperatorMatrix h = OperatorMatrix::Zero();
  h(A, A) = -p.delta1;
  h(A, C) = h(C, A) = -0.5 * p.omega;
  h(A, B) = h(B, A) = -0.5 * p.g;
  h(index(Level::d), index(Level::d)) = -p.delta1;
  return h;
}

double mixingAngle(double g, double omega) { return std::atan2(g, omega); }

TripodEigenSystem tripodEigensystem(const SystemParams& p) {
  if (std::abs(p.delta1 - p.delta2) > 1e-12 * std::max(1.0, std::abs(p.delta1))) {
    std::ostringstream os;
    os << "tripod eigensystem requires delta1 == delta2 (got " << p.delta1 << ", " << p.delta2
       << ")";
    throw DomainError(os.str());
  }
  TripodEigenSystem e;
  e.delta = p.delta1;
  e.coupling = std::hypot(p.g, p.omega);
  if (!(e.coupling > 0.0)) throw DegenerateError("tripod eigensystem needs g or omega > 0");

  const double root = std::hypot(e.delta, e.coupling);
  const double g2 = e.coupling * e.coupling;
  // E+ E- = -G^2 / 4.
  if (e.delta >= 0.0) {
    e.e_minus = 0.5 * (-e.delta - root);
    e.e_plus = -g2 / (4.0 * e.e_minus);
  } else {
    e.e_plus = 0.5 * (-e.delta + root);
    e.e_minus = -g2 / (4.0 * e.e_plus);
  }
  e.e_zero = 0.0;
  e.theta = mixingAngle(p.g, p.omega);
  e.phi = std::atan(2.0 * e.e_minus / e.coupling);

  const double st = std::sin(e.theta), ct = std::cos(e.theta);
  const double sp = std::sin(e.phi), cp = std::cos(e.phi);
  e.bright_state = StateVector::Zero();
  e.bright_state(B) = st;
  e.bright_state(C) = ct;
  e.dark_state = StateVector::Zero();
  e.dark_state(B) = ct;
  e.dark_state(C) = -st;
  e.plus_state = StateVector::Zero();
  e.plus_state(A) = cp;
  e.plus_state(B) = sp * st;
  e.plus_state(C) = sp * ct;
  e.minus_state = StateVector::Zero();
  e.minus_state(A) = -sp;
  e.minus_state(B) = cp * st;
  e.minus_state(C) = cp * ct;
  return e;
}

double darkStatePopulation(const DensityMatrix& rho, double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return c * c * rho.population(Level::b) + s * s * rho.population(Level::c) -
         2.0 * s * c * rho(Level::b, Level::c).real();
}

double darkStatePopulation(const DensityMatrix& rho, const TripodEigenSystem& eig) {
  return darkStatePopulation(rho, eig.theta);
}

double brightStatePopulation(const DensityMatrix& rho, double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return s * s * rho.population(Level::b) + c * c * rho.population(Level::c) +
         2.0 * s * c * rho(Level::b, Level::c).real();
}

double brightStatePopulation(const DensityMatrix& rho, const TripodEigenSystem& eig) {
  return brightStatePopulation(rho, eig.theta);
}

double darkStateRate(const SystemParams& p, const DensityMatrix& rho,
                     const TripodEigenSystem& eig) {
  const double s = std::sin(eig.theta), c = std::cos(eig.theta);
  return (p.gamma_cd + p.gamma_bd) * s * c * rho(Level::b, Level::c).real() -
         c * c * p.gamma_bd * rho.population(Level::b) -
         s * s * p.gamma_cd * rho.population(Level::c);
}

Superoperator reducedLossLiouvillian(const SystemParams& p) {
  const OperatorMatrix pa = transition(Level::a, Level::a);
  return commutatorSuperoperator(buildHamiltonian(p)) +
         lindbladTerm(transition(Level::d, Level::b), p.gamma_bd) +
         lindbladTerm(transition(Level::d, Level::c), p.gamma_cd) -
         0.5 * p.gamma_a() * (leftMultiply(pa) + rightMultiply(pa));
}

double reducedDarkStateRate(const SystemParams& p, const DensityMatrix& rho,
                            const TripodEigenSystem& eig) {
  const OperatorMatrix drho = unvec(LiouvilleVector(reducedLossLiouvillian(p) * vec(rho)));
  return eig.dark_state.dot(drho * eig.dark_state).real();
}

SubmatrixEigs lowerSubmatrixEigs(const DensityMatrix& rho) {
  const double bb = rho.population(Level::b);
  const double cc = rho.population(Level::c);
  const Complex bc = rho(Level::b, Level::c);
  const double mean = 0.5 * (bb + cc);
  const double radius = std::hypot(0.5 * (bb - cc), std::abs(bc));

  SubmatrixEigs out;
  out.lambda1 = mean + radius;
  out.lambda2 = mean - radius;

  if (std::abs(bc) == 0.0) {
    const Eigen::Vector2cd eb(1.0, 0.0), ec(0.0, 1.0);
    out.psi1 = bb >= cc ? eb : ec;
    out.psi2 = bb >= cc ? ec : eb;
    return out;
  }
  // Null vector of (M - lambda): pick whichever row gives the larger vector.
  auto eigenvector = [&](double lambda) {
    Eigen::Vector2cd u(bc, lambda - bb);
    Eigen::Vector2cd w(lambda - cc, std::conj(bc));
    Eigen::Vector2cd v = u.norm() >= w.norm() ? u : w;
    return Eigen::Vector2cd(v / v.norm());
  };
  out.psi1 = eigenvector(out.lambda1);
  out.psi2 = eigenvector(out.lambda2);
  return out;
}

RamanDiagnostics ramanRateDiagnostics(const SystemParams& p) {
  const double coupling = p.g * p.omega;
  const double num = coupling * coupling;
  const double ga2 = p.gamma_a() * p.gamma_a();
  auto leg = [&](double delta) {
    if (num == 0.0) return 0.0;
    const double den = delta * delta + ga2;
    return den == 0.0 ? std::numeric_limits<double>::infinity() : num / den;
  };
  return {leg(p.delta1), leg(p.delta2), p.delta1 == p.delta2};
}

double resonanceGainIdentity(const SystemParams& p, const DensityMatrix& rho) {
  if (p.delta2 != 0.0) {
    throw DomainError("resonanceGainIdentity requires delta2 = 0");
  }
  const double width = p.r_bd + p.gamma_bd + p.gamma_ab + p.gamma_ac;
  const double drive = p.g * (rho.population(Level::a) - rho.population(Level::b)) -
                       p.omega * rho(Level::b, Level::c).real();
  const double im_ba = rho(Level::b, Level::a).imag();
  if (width == 0.0) return std::abs(drive);
  return std::abs(im_ba - drive / width);
}

}  // namespace lwi
