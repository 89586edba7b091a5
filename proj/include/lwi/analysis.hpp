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

// Observables and closed-form results for the four-level probe-gain model:
// probe response, resonant strong-coupling limits, dressed and tripod
// eigenbases, dark/bright populations, and a few identities used as checks.

#include "lwi/model.hpp"

namespace lwi {

/// Probe gain is proportional to Im rho_ba, with rho_ba = <b|rho|a>.
struct ProbeResponse {
  double im_rho_ba = 0.0;
  double re_rho_ba = 0.0;
  double re_rho_bc = 0.0;
  bool gain() const noexcept { return im_rho_ba > 0.0; }
};

ProbeResponse probeResponse(const DensityMatrix& rho);

// ---------------------------------------------------------------------------
// Resonant limit (delta1 = delta2 = 0, r_bd = 0, omega >> everything else).
// All three throw DomainError outside that parameter domain and
// DegenerateError when the common denominator vanishes.

/// Leading-order Im rho_ba:
///   g R_cd [(g_cd + g_bd + R_cd)(g_bd - g_ab) + g_bd (g_ac + g_ab)] / (omega^2 den)
/// with den = (2 R_cd + g_cd) g_bd + R_cd (g_bd + g_ab) + g_bd g_ab.
double analyticResonantGain(const SystemParams& p);

/// True exactly when analyticResonantGain(p) > 0.
bool gainConditionResonant(const SystemParams& p);

/// Right-hand side of the resonant gain condition,
/// g_bd (g_ac + g_ab) / (g_cd + g_bd + R_cd).
double resonantGainBound(const SystemParams& p);

struct Populations {
  double aa = 0.0, bb = 0.0, cc = 0.0, dd = 0.0;
};

Populations analyticResonantPopulations(const SystemParams& p);

// ---------------------------------------------------------------------------
// Autler-Townes basis of the {a, c} block.

struct AutlerTownesBasis {
  double lambda_plus = 0.0;   // (delta1 - sqrt(delta1^2 + omega^2)) / 2
  double lambda_minus = 0.0;  // (delta1 + sqrt(delta1^2 + omega^2)) / 2
  double theta_plus = 0.0;    // tan = -omega / (2 lambda_plus), in (0, pi/2]
  double theta_minus = 0.0;   // tan = -omega / (2 lambda_minus), in (-pi/2, 0)
  StateVector plus_state;     // sin(theta+) |a> + cos(theta+) |c>
  StateVector minus_state;    // sin(theta-) |a> + cos(theta-) |c>
};

/// Throws DegenerateError for omega == 0.
AutlerTownesBasis autlerTownes(const SystemParams& p);

struct DressedPopulations {
  double plus = 0.0;   // <+|rho|+>
  double minus = 0.0;  // <-|rho|->
};

DressedPopulations dressedPopulations(const DensityMatrix& rho, const AutlerTownesBasis& basis);

// ---------------------------------------------------------------------------
// Tripod eigensystem for delta1 = delta2 = delta.

/// Hamiltonian after the constant shift by -delta:
/// -delta |a><a| - (omega |a><c| + g |a><b| + h.c.) / 2 - delta |d><d|.
/// Uses p.delta1 as delta.
OperatorMatrix tripodFrameHamiltonian(const SystemParams& p);

/// Mixing angle theta in [0, pi/2] with tan(theta) = g / omega.
double mixingAngle(double g, double omega);

/// Eigenvalues and eigenvectors of tripodFrameHamiltonian() on {a, b, c}.
///
/// E+- = (-delta +- sqrt(delta^2 + G^2)) / 2 and E0 = 0, G = sqrt(g^2 + omega^2);
/// tan(phi) = -G / (2 E+) = 2 E- / G.
///
/// |E+> = cos(phi)|a> + sin(phi)|up>, |E-> = -sin(phi)|a> + cos(phi)|up>,
/// |E0> = cos(theta)|b> - sin(theta)|c>, |up> = sin(theta)|b> + cos(theta)|c>,
/// with phi in (-pi/2, 0). Phases make the |a> amplitude of |E+->, and the |b>
/// amplitude of |E0>, real and non-negative.
struct TripodEigenSystem {
  double delta = 0.0;
  double coupling = 0.0;  // G
  double theta = 0.0;
  double phi = 0.0;
  double e_plus = 0.0;
  double e_minus = 0.0;
  double e_zero = 0.0;
  StateVector plus_state;
  StateVector minus_state;
  StateVector dark_state;
  StateVector bright_state;  // |up>
};

/// Throws DomainError unless delta1 == delta2, DegenerateError when G == 0.
TripodEigenSystem tripodEigensystem(const SystemParams& p);

/// rho_00 = <E0|rho|E0>.
double darkStatePopulation(const DensityMatrix& rho, const TripodEigenSystem& eig);
double darkStatePopulation(const DensityMatrix& rho, double theta);

/// rho_upup = <up|rho|up>.
double brightStatePopulation(const DensityMatrix& rho, const TripodEigenSystem& eig);
double brightStatePopulation(const DensityMatrix& rho, double theta);

/// Loss rate of the dark-state population once repopulation (feeding from
/// |a>, all incoherent pumping) is ignored:
///   (g_cd + g_bd) sin cos Re rho_bc - cos^2 g_bd rho_bb - sin^2 g_cd rho_cc.
double darkStateRate(const SystemParams& p, const DensityMatrix& rho,
                     const TripodEigenSystem& eig);

/// Generator with only loss terms: coherent part, b->d at gamma_bd, c->d at
/// gamma_cd, and |a> decaying at gamma_a without feeding b or c. No pumping.
Superoperator reducedLossLiouvillian(const SystemParams& p);

/// <E0| L_reduced(rho) |E0>, computed from reducedLossLiouvillian().
double reducedDarkStateRate(const SystemParams& p, const DensityMatrix& rho,
                            const TripodEigenSystem& eig);

// ---------------------------------------------------------------------------

/// Eigen-decomposition of the lower 2x2 block [[rho_bb, rho_bc], [rho_cb, rho_cc]].
struct SubmatrixEigs {
  double lambda1 = 0.0;  // larger
  double lambda2 = 0.0;
  Eigen::Vector2cd psi1;
  Eigen::Vector2cd psi2;
};

SubmatrixEigs lowerSubmatrixEigs(const DensityMatrix& rho);

/// Dimensionless second-order Raman/Rayleigh magnitudes
/// (g omega)^2 / (delta^2 + gamma_a^2) for the coupling (delta1) and probe
/// (delta2) legs. A magnitude is +inf when its denominator vanishes with
/// g omega > 0, and 0 whenever g omega = 0.
struct RamanDiagnostics {
  double coupling_leg = 0.0;
  double probe_leg = 0.0;
  bool two_photon_resonant = false;  // delta1 == delta2
};

RamanDiagnostics ramanRateDiagnostics(const SystemParams& p);

/// |Im rho_ba - [g (rho_aa - rho_bb) - omega Re rho_bc] / (R_bd + g_bd + g_ab + g_ac)|,
/// which vanishes for any steady state at delta2 = 0. When the denominator is
/// zero the multiplied-through residual is returned. Throws DomainError for
/// delta2 != 0.
double resonanceGainIdentity(const SystemParams& p, const DensityMatrix& rho_ss);

}  // namespace lwi
