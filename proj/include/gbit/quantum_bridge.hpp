// Copyright 2026 The gbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GBIT_QUANTUM_BRIDGE_HPP
#define GBIT_QUANTUM_BRIDGE_HPP

#include <array>
#include <cstdint>

#include "gbit/composite.hpp"

namespace gbit {

/// Pauli matrices sigma_1, sigma_2, sigma_3 (index 0..2).
const CMat &pauli(int i);

/// Hermitian, unit-trace operator on 1, 2 or 3 qubits. Subsystem 1 is the
/// leftmost tensor factor (most significant bit of the basis index).
///
/// Positivity is not required: the mirror construction produces
/// non-positive operators that still have to flow through the pipeline.
/// They are flagged by `physical()`.
class DensityMatrix {
  public:
    /// Throws std::invalid_argument for bad dimension, non-Hermitian input
    /// or trace != 1 (tolerance 1e-12).
    explicit DensityMatrix(CMat m);

    static DensityMatrix from_state_vector(const CVec &psi);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(m_.rows()); }
    int qubits() const;
    const CMat &matrix() const { return m_; }
    double min_eigenvalue() const;
    bool physical() const { return min_eigenvalue() >= -kValidityTol; }

  private:
    CMat m_;
};

class UnitaryMap {
  public:
    /// Throws std::invalid_argument unless U^dagger U = 1 within 1e-12.
    explicit UnitaryMap(CMat u);

    static UnitaryMap identity(int dim) { return UnitaryMap(CMat::Identity(dim, dim)); }
    /// The swap of two qubits.
    static UnitaryMap swap();
    /// exp(-i angle/2 n.sigma) for a unit axis n.
    static UnitaryMap spin_rotation(const Eigen::Vector3d &axis, double angle);

    int dim() const { return static_cast<int>(u_.rows()); }
    const CMat &matrix() const { return u_; }
    UnitaryMap operator*(const UnitaryMap &other) const { return UnitaryMap(u_ * other.u_); }
    UnitaryMap conjugate() const { return UnitaryMap(u_.conjugate()); }

  private:
    CMat u_;
};

UnitaryMap kron(const UnitaryMap &a, const UnitaryMap &b);
CMat kron(const CMat &a, const CMat &b);

/// Single-qubit state (I + x.sigma) / 2.
DensityMatrix density_from_bloch(const BlochState &x);
/// rho = (I + sum x_i s_i x I + sum y_i I x s_i + sum T_ij s_i x s_j) / 4.
/// Throws std::invalid_argument unless d = 3.
DensityMatrix density_from_bloch(const TwoGbitState &psi);

/// x_i = Tr(sigma_i rho). Requires dim 2.
BlochState single_bloch_from_density(const DensityMatrix &rho);
/// x_i = Tr(s_i x I rho), y_i = Tr(I x s_i rho), T_ij = Tr(s_i x s_j rho).
/// Requires dim 4.
TwoGbitState bloch_from_density(const DensityMatrix &rho);
/// Same expansion computed directly on a normalized two-qubit vector.
TwoGbitState bloch_from_state_vector(const CVec &psi);

/// R_ij = Tr(s_i U s_j U^dagger) / 2, the SU(2) -> SO(3) covering map.
/// The factor 1/2 makes R(1) = 1.
OrthogonalMap su2_to_so3(const UnitaryMap &u);

/// Transpose of tensor factor `subsystem` (1-based) of an operator on
/// 2 or 3 qubits. Works on arbitrary (also non-Hermitian) operators.
CMat partial_transpose(const CMat &op, int subsystem);
DensityMatrix partial_transpose(const DensityMatrix &rho, int subsystem);

/// rho -> PT1(U PT1(rho) U^dagger).
CMat conjugate_by_pt1(const UnitaryMap &u, const CMat &rho);
/// rho -> PT2(U* PT2(rho) U^T).
CMat conjugate_by_pt2_of_conjugate(const UnitaryMap &u, const CMat &rho);

/// Max entrywise deviation between PT1 U PT1 and PT2 U* PT2 evaluated on
/// `samples` random product operators and `samples` random generic
/// operators (all complex, not necessarily Hermitian).
double lemma4_identity_check(const UnitaryMap &u, int samples, std::uint64_t seed);

/// Rotation relabelling the axes used by the subspace constructions (e1 is
/// the correlation axis) into Pauli axes (sigma_3 is diagonal in the
/// computational basis): e1 -> e3, e2 -> -e2, e3 -> e1. Determinant +1.
const OrthogonalMap &computational_axes();
TwoGbitState to_computational_axes(const TwoGbitState &psi);
TwoGbitState from_computational_axes(const TwoGbitState &psi);

struct SchmidtCirclePoint {
    /// (cos a e1, cos a e1, diag[1, -sin a, sin a]), subspace axes.
    TwoGbitState state;
    /// cos(a/2)|00> + sin(a/2)|11>.
    CVec vector;
};

SchmidtCirclePoint schmidt_circle(double angle);

} // namespace gbit

#endif
