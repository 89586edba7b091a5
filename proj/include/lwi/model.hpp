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

#include <complex>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace lwi {

using Complex = std::complex<double>;

/// Bare atomic levels. The numeric value is the basis index and never changes.
enum class Level : int { a = 0, b = 1, c = 2, d = 3 };

inline constexpr int kLevels = 4;
inline constexpr int kLiouvilleDim = kLevels * kLevels;

constexpr int index(Level l) noexcept { return static_cast<int>(l); }
const char* levelName(Level l) noexcept;

using OperatorMatrix = Eigen::Matrix<Complex, kLevels, kLevels>;
using StateVector = Eigen::Matrix<Complex, kLevels, 1>;
/// Generator acting on vec(rho); vec() stacks columns, so rho(i, j) sits at
/// position i + 4 * j.
using Superoperator = Eigen::Matrix<Complex, kLiouvilleDim, kLiouvilleDim>;
using LiouvilleVector = Eigen::Matrix<Complex, kLiouvilleDim, 1>;

/// Physical rates and detunings, all in units of one reference rate.
///
/// Construct through validateParams() (or check with validate()) so that the
/// sign invariants hold; afterwards treat the record as a plain value.
struct SystemParams {
  double omega = 0.0;   // coupling Rabi frequency on a<->c
  double g = 0.0;       // probe Rabi frequency on a<->b
  double delta1 = 0.0;  // coupling detuning
  double delta2 = 0.0;  // probe detuning
  double gamma_ab = 0.0;
  double gamma_ac = 0.0;
  double gamma_bd = 0.0;
  double gamma_cd = 0.0;
  double r_bd = 0.0;  // incoherent pump rate b<->d
  double r_cd = 0.0;  // incoherent pump rate c<->d
  std::string unit_label;

  /// Total decay rate out of |a>.
  double gamma_a() const noexcept { return gamma_ab + gamma_ac; }

  /// Thermal photon numbers n = R / gamma; empty when gamma is zero.
  std::optional<double> n_bd() const;
  std::optional<double> n_cd() const;

  bool operator==(const SystemParams&) const = default;
};

/// Unvalidated parameter record as read from a config file. Each pump
/// channel may be given as a rate (r_*) or as a photon number (n_*).
struct RawParams {
  std::optional<double> omega, g, delta1, delta2;
  std::optional<double> gamma_ab, gamma_ac, gamma_bd, gamma_cd;
  std::optional<double> r_bd, r_cd, n_bd, n_cd;
  std::string unit_label;
};

/// Normalizes a raw record: converts photon numbers to rates (R = n * gamma)
/// and checks every sign constraint. Throws ValidationError (missing or
/// negative field), ConflictError (r and n on one channel) or
/// IllDefinedPumpError (n > 0 with gamma = 0).
SystemParams validateParams(const RawParams& raw);

/// Re-checks the sign invariants of an already built record.
void validate(const SystemParams& p);

/// 4x4 density matrix over {a, b, c, d}. Holds any complex matrix; physical
/// validity is checked separately by checkPhysical()/assertPhysical().
class DensityMatrix {
 public:
  DensityMatrix() : rho_(OperatorMatrix::Zero()) {}
  explicit DensityMatrix(const OperatorMatrix& rho) : rho_(rho) {}

  static DensityMatrix pure(Level l);
  /// |psi><psi| / <psi|psi>.
  static DensityMatrix fromState(const StateVector& psi);
  static DensityMatrix maximallyMixed();

  const OperatorMatrix& matrix() const noexcept { return rho_; }
  Complex operator()(Level i, Level j) const { return rho_(index(i), index(j)); }
  double population(Level l) const { return rho_(index(l), index(l)).real(); }
  Complex trace() const { return rho_.trace(); }

  /// (rho + rho^dagger) / 2.
  DensityMatrix hermitized() const;

 private:
  OperatorMatrix rho_;
};

struct PhysicalTolerance {
  double hermitian = 1e-12;
  double trace = 1e-10;
  double min_eigenvalue = -1e-9;
};

struct PhysicalityReport {
  double hermiticity_error = 0.0;  // max |rho_ij - conj(rho_ji)|
  double trace_error = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;     // of the Hermitian part
  bool ok = false;
  std::string describe() const;
};

PhysicalityReport checkPhysical(const DensityMatrix& rho,
                                const PhysicalTolerance& tol = {});

/// Throws lwi::Error with the report text if rho is not physical.
void assertPhysical(const DensityMatrix& rho, const PhysicalTolerance& tol = {});

/// Largest elementwise |A_ij - conj(A_ji)|.
double hermiticityError(const OperatorMatrix& m);

}  // namespace lwi
