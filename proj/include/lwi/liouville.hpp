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

#include <array>
#include <span>

#include "lwi/model.hpp"

namespace lwi {

/// One Lindblad term rate * D[jump], with D[s]rho = s rho s^dag - {s^dag s, rho}/2.
struct LindbladChannel {
  Level to;    // jump = |to><from|
  Level from;
  double rate;
  OperatorMatrix jump() const;
};

/// The six damping/pumping channels in fixed order:
/// a->b, a->c, b->d, c->d, d->b, d->c.
std::array<LindbladChannel, 6> lindbladChannels(const SystemParams& p);

/// |i><j|.
OperatorMatrix transition(Level i, Level j);

/// Rotating-frame Hamiltonian (hbar = 1):
/// H = delta2 |b><b| + delta1 |c><c| - (omega |a><c| + g |a><b| + h.c.) / 2.
OperatorMatrix buildHamiltonian(const SystemParams& p);

/// vec(A X B) = (B^T (x) A) vec(X) building blocks for column stacking.
Superoperator leftMultiply(const OperatorMatrix& a);
Superoperator rightMultiply(const OperatorMatrix& b);

/// -i [H, .] as a superoperator.
Superoperator commutatorSuperoperator(const OperatorMatrix& h);

/// rate * D[jump] as a superoperator.
Superoperator lindbladTerm(const OperatorMatrix& jump, double rate);

/// Sum of the six channel dissipators.
Superoperator buildDissipator(const SystemParams& p);

/// Full generator: -i[H, .] + dissipator.
Superoperator buildLiouvillian(const SystemParams& p);

/// Component-wise optical Bloch equations, written out by hand. Independent
/// of the superoperator path so the two constructions check each other.
OperatorMatrix blochRHS(const SystemParams& p, const OperatorMatrix& rho);
inline OperatorMatrix blochRHS(const SystemParams& p, const DensityMatrix& rho) {
  return blochRHS(p, rho.matrix());
}

/// Position of rho(i, j) inside vec(rho).
constexpr int vecIndex(int i, int j) noexcept { return i + kLevels * j; }

LiouvilleVector vec(const OperatorMatrix& rho);
inline LiouvilleVector vec(const DensityMatrix& rho) { return vec(rho.matrix()); }

/// Inverse of vec(). Throws DimensionError unless v has 16 entries.
OperatorMatrix unvec(std::span<const Complex> v);
OperatorMatrix unvec(const LiouvilleVector& v);

/// Row vector t with t . vec(rho) = Tr rho.
Eigen::Matrix<Complex, 1, kLiouvilleDim> traceFunctional();

}  // namespace lwi
