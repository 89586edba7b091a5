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

#include "lwi/liouville.hpp"

#include "lwi/errors.hpp"

namespace lwi {

namespace {

constexpr int A = index(Level::a);
constexpr int B = index(Level::b);
constexpr int C = index(Level::c);
constexpr int D = index(Level::d);

// (x) for two 4x4 operators, producing the 16x16 Kronecker product.
Superoperator kron(const OperatorMatrix& x, const OperatorMatrix& y) {
  Superoperator k;
  for (int i = 0; i < kLevels; ++i) {
    for (int j = 0; j < kLevels; ++j) {
      k.block<kLevels, kLevels>(i * kLevels, j * kLevels) = x(i, j) * y;
    }
  }
  return k;
}

}  // namespace

OperatorMatrix transition(Level i, Level j) {
  OperatorMatrix m = OperatorMatrix::Zero();
  m(index(i), index(j)) = 1.0;
  return m;
}

OperatorMatrix LindbladChannel::jump() const { return transition(to, from); }

std::array<LindbladChannel, 6> lindbladChannels(const SystemParams& p) {
  return {{
      {Level::b, Level::a, p.gamma_ab},
      {Level::c, Level::a, p.gamma_ac},
      {Level::d, Level::b, p.gamma_bd + p.r_bd},
      {Level::d, Level::c, p.gamma_cd + p.r_cd},
      {Level::b, Level::d, p.r_bd},
      {Level::c, Level::d, p.r_cd},
  }};
}

OperatorMatrix buildHamiltonian(const SystemParams& p) {
  OperatorMatrix h = OperatorMatrix::Zero();
  h(B, B) = p.delta2;
  h(C, C) = p.delta1;
  h(A, C) = h(C, A) = -0.5 * p.omega;
  h(A, B) = h(B, A) = -0.5 * p.g;
  return h;
}

Superoperator leftMultiply(const OperatorMatrix& a) {
  return kron(OperatorMatrix::Identity(), a);
}

Superoperator rightMultiply(const OperatorMatrix& b) {
  return kron(b.transpose(), OperatorMatrix::Identity());
}

Superoperator commutatorSuperoperator(const OperatorMatrix& h) {
  const Complex minus_i(0.0, -1.0);
  return minus_i * (leftMultiply(h) - rightMultiply(h));
}

Superoperator lindbladTerm(const OperatorMatrix& jump, double rate) {
  if (rate == 0.0) return Superoperator::Zero();
  const OperatorMatrix n = jump.adjoint() * jump;
  return rate * (kron(jump.conjugate(), jump) - 0.5 * leftMultiply(n) - 0.5 * rightMultiply(n));
}

Superoperator buildDissipator(const SystemParams& p) {
  Superoperator l = Superoperator::Zero();
  for (const LindbladChannel& ch : lindbladChannels(p)) l += lindbladTerm(ch.jump(), ch.rate);
  return l;
}

Superoperator buildLiouvillian(const SystemParams& p) {
  return commutatorSuperoperator(buildHamiltonian(p)) + buildDissipator(p);
}

OperatorMatrix blochRHS(const SystemParams& p, const OperatorMatrix& r) {
  const Complex i(0.0, 1.0);
  const double g = p.g;
  const double w = p.omega;
  const double gab = p.gamma_ab, gac = p.gamma_ac, gbd = p.gamma_bd, gcd = p.gamma_cd;
  const double rbd = p.r_bd, rcd = p.r_cd;

  OperatorMatrix dr = OperatorMatrix::Zero();

  dr(B, B) = gab * r(A, A) + 0.5 * i * g * (r(A, B) - r(B, A)) + rbd * (r(D, D) - r(B, B)) -
             gbd * r(B, B);
  dr(C, C) = gac * r(A, A) + 0.5 * i * w * (r(A, C) - r(C, A)) + rcd * (r(D, D) - r(C, C)) -
             gcd * r(C, C);
  dr(D, D) = -rcd * (r(D, D) - r(C, C)) - rbd * (r(D, D) - r(B, B)) + gbd * r(B, B) +
             gcd * r(C, C);
  dr(B, C) = -0.5 * (rcd + rbd + gcd + gbd + 2.0 * i * (p.delta2 - p.delta1)) * r(B, C) -
             0.5 * i * w * r(B, A) + 0.5 * i * g * r(A, C);
  dr(B, A) = -0.5 * (rbd + gbd + gab + gac + 2.0 * i * p.delta2) * r(B, A) +
             0.5 * i * g * (r(A, A) - r(B, B)) - 0.5 * i * w * r(B, C);
  dr(C, A) = -0.5 * (rcd + gcd + gab + gac + 2.0 * i * p.delta1) * r(C, A) +
             0.5 * i * w * (r(A, A) - r(C, C)) - 0.5 * i * g * r(C, B);
  dr(A, A) = -(dr(B, B) + dr(C, C) + dr(D, D));

  // Coherences with the ground level. They decouple from the rest: d carries
  // no field, and the jump terms only feed populations.
  const double out_a = gab + gac;
  const double out_b = gbd + rbd;
  const double out_c = gcd + rcd;
  const double out_d = rbd + rcd;
  dr(D, A) = -0.5 * (out_d + out_a) * r(D, A) - 0.5 * i * (g * r(D, B) + w * r(D, C));
  dr(D, B) = -0.5 * (out_d + out_b) * r(D, B) + i * (p.delta2 * r(D, B) - 0.5 * g * r(D, A));
  dr(D, C) = -0.5 * (out_d + out_c) * r(D, C) + i * (p.delta1 * r(D, C) - 0.5 * w * r(D, A));

  // Remaining components by Hermiticity.
  dr(A, B) = std::conj(dr(B, A));
  dr(A, C) = std::conj(dr(C, A));
  dr(C, B) = std::conj(dr(B, C));
  dr(A, D) = std::conj(dr(D, A));
  dr(B, D) = std::conj(dr(D, B));
  dr(C, D) = std::conj(dr(D, C));
  return dr;
}

LiouvilleVector vec(const OperatorMatrix& rho) {
  LiouvilleVector v;
  for (int j = 0; j < kLevels; ++j) {
    for (int i = 0; i < kLevels; ++i) v(vecIndex(i, j)) = rho(i, j);
  }
  return v;
}

OperatorMatrix unvec(std::span<const Complex> v) {
  if (v.size() != static_cast<std::size_t>(kLiouvilleDim)) {
    throw DimensionError("unvec expects " + std::to_string(kLiouvilleDim) +
                         " entries, got " + std::to_string(v.size()));
  }
  OperatorMatrix m;
  for (int j = 0; j < kLevels; ++j) {
    for (int i = 0; i < kLevels; ++i) m(i, j) = v[vecIndex(i, j)];
  }
  return m;
}

OperatorMatrix unvec(const LiouvilleVector& v) {
  return unvec(std::span<const Complex>(v.data(), kLiouvilleDim));
}

Eigen::Matrix<Complex, 1, kLiouvilleDim> traceFunctional() {
  Eigen::Matrix<Complex, 1, kLiouvilleDim> t = Eigen::Matrix<Complex, 1, kLiouvilleDim>::Zero();
  for (int k = 0; k < kLevels; ++k) t(vecIndex(k, k)) = 1.0;
  return t;
}

}  // namespace lwi
