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

#include "gbit/quantum_bridge.hpp"

#include <cmath>
#include <stdexcept>

namespace gbit {

namespace {

constexpr double kMatrixTol = 1e-12;

const std::array<CMat, 3> &pauli_table() {
    static const std::array<CMat, 3> table = [] {
        const Complex i(0.0, 1.0);
        std::array<CMat, 3> p{CMat(2, 2), CMat(2, 2), CMat(2, 2)};
        p[0] << 0.0, 1.0, 1.0, 0.0;
        p[1] << 0.0, -i, i, 0.0;
        p[2] << 1.0, 0.0, 0.0, -1.0;
        return p;
    }();
    return table;
}

const CMat &id2() {
    static const CMat m = CMat::Identity(2, 2);
    return m;
}

double trace_real(const CMat &a, const CMat &b) {
    // Re Tr(a b) without forming the product.
    return (a.transpose().cwiseProduct(b)).sum().real();
}

} // namespace

const CMat &pauli(int i) {
    if (i < 0 || i > 2) {
        throw std::invalid_argument("pauli: index must be 0, 1 or 2");
    }
    return pauli_table()[static_cast<std::size_t>(i)];
}

DensityMatrix::DensityMatrix(CMat m) : m_(std::move(m)) {
    const auto n = m_.rows();
    if (m_.cols() != n || (n != 2 && n != 4 && n != 8)) {
        throw std::invalid_argument("DensityMatrix: dimension must be 2, 4 or 8");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kMatrixTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0, 0.0)) > kMatrixTol) {
        throw std::invalid_argument("DensityMatrix: trace must be 1");
    }
}

DensityMatrix DensityMatrix::from_state_vector(const CVec &psi) {
    if (std::abs(psi.norm() - 1.0) > kMatrixTol) {
        throw std::invalid_argument("DensityMatrix: state vector must be normalized");
    }
    CMat m = psi * psi.adjoint();
    // Exact Hermiticity for the validity check.
    return DensityMatrix(0.5 * (m + m.adjoint()));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return DensityMatrix(CMat::Identity(dim, dim) / static_cast<double>(dim));
}

int DensityMatrix::qubits() const { return dim() == 2 ? 1 : dim() == 4 ? 2 : 3; }

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<CMat> eig(m_, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff();
}

UnitaryMap::UnitaryMap(CMat u) : u_(std::move(u)) {
    if (u_.rows() != u_.cols() || u_.rows() == 0) {
        throw std::invalid_argument("UnitaryMap: matrix must be square");
    }
    if ((u_.adjoint() * u_ - CMat::Identity(u_.rows(), u_.cols())).cwiseAbs().maxCoeff() > kMatrixTol) {
        throw std::invalid_argument("UnitaryMap: matrix is not unitary");
    }
}

UnitaryMap UnitaryMap::swap() {
    CMat s = CMat::Zero(4, 4);
    s(0, 0) = 1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 3) = 1.0;
    return UnitaryMap(std::move(s));
}

UnitaryMap UnitaryMap::spin_rotation(const Eigen::Vector3d &axis, double angle) {
    Eigen::Vector3d n = axis.normalized();
    CMat ns = n(0) * pauli(0) + n(1) * pauli(1) + n(2) * pauli(2);
    const Complex i(0.0, 1.0);
    return UnitaryMap(std::cos(angle / 2) * id2() - i * std::sin(angle / 2) * ns);
}

CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

UnitaryMap kron(const UnitaryMap &a, const UnitaryMap &b) { return UnitaryMap(kron(a.matrix(), b.matrix())); }

DensityMatrix density_from_bloch(const BlochState &x) {
    if (x.d() != 3) {
        throw std::invalid_argument("density_from_bloch: qubit states need d = 3");
    }
    CMat m = id2();
    for (int i = 0; i < 3; ++i) {
        m += x[i] * pauli(i);
    }
    return DensityMatrix(0.5 * m);
}

DensityMatrix density_from_bloch(const TwoGbitState &psi) {
    if (psi.d() != 3) {
        throw std::invalid_argument("density_from_bloch: qubit states need d = 3");
    }
    CMat m = CMat::Identity(4, 4);
    for (int i = 0; i < 3; ++i) {
        m += psi.x()(i) * kron(pauli(i), id2());
        m += psi.y()(i) * kron(id2(), pauli(i));
        for (int j = 0; j < 3; ++j) {
            m += psi.t()(i, j) * kron(pauli(i), pauli(j));
        }
    }
    return DensityMatrix(0.25 * m);
}

BlochState single_bloch_from_density(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("single_bloch_from_density: need a qubit operator");
    }
    Vec x(3);
    for (int i = 0; i < 3; ++i) {
        x(i) = trace_real(pauli(i), rho.matrix());
    }
    return BlochState(std::move(x));
}

TwoGbitState bloch_from_density(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("bloch_from_density: need a two-qubit operator");
    }
    Vec x(3), y(3);
    Mat t(3, 3);
    for (int i = 0; i < 3; ++i) {
        x(i) = trace_real(kron(pauli(i), id2()), rho.matrix());
        y(i) = trace_real(kron(id2(), pauli(i)), rho.matrix());
        for (int j = 0; j < 3; ++j) {
            t(i, j) = trace_real(kron(pauli(i), pauli(j)), rho.matrix());
        }
    }
    return {std::move(x), std::move(y), std::move(t)};
}

TwoGbitState bloch_from_state_vector(const CVec &psi) {
    if (psi.size() != 4) {
        throw std::invalid_argument("bloch_from_state_vector: need four amplitudes");
    }
    return bloch_from_density(DensityMatrix::from_state_vector(psi));
}

OrthogonalMap su2_to_so3(const UnitaryMap &u) {
    if (u.dim() != 2) {
        throw std::invalid_argument("su2_to_so3: need a single-qubit unitary");
    }
    Mat r(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r(i, j) = 0.5 * trace_real(pauli(i), u.matrix() * pauli(j) * u.matrix().adjoint());
        }
    }
    return OrthogonalMap(std::move(r));
}

CMat partial_transpose(const CMat &op, int subsystem) {
    const auto n = op.rows();
    if (op.cols() != n || (n != 4 && n != 8)) {
        throw std::invalid_argument("partial_transpose: need a 2- or 3-qubit operator");
    }
    const int qubits = n == 4 ? 2 : 3;
    if (subsystem < 1 || subsystem > qubits) {
        throw std::invalid_argument("partial_transpose: subsystem index out of range");
    }
    const Eigen::Index bit = Eigen::Index{1} << (qubits - subsystem);
    CMat out(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            // Swap the chosen qubit's row and column indices.
            Eigen::Index r2 = (r & ~bit) | (c & bit);
            Eigen::Index c2 = (c & ~bit) | (r & bit);
            out(r2, c2) = op(r, c);
        }
    }
    return out;
}

DensityMatrix partial_transpose(const DensityMatrix &rho, int subsystem) {
    return DensityMatrix(partial_transpose(rho.matrix(), subsystem));
}

CMat conjugate_by_pt1(const UnitaryMap &u, const CMat &rho) {
    return partial_transpose(u.matrix() * partial_transpose(rho, 1) * u.matrix().adjoint(), 1);
}

CMat conjugate_by_pt2_of_conjugate(const UnitaryMap &u, const CMat &rho) {
    return partial_transpose(u.matrix().conjugate() * partial_transpose(rho, 2) * u.matrix().transpose(), 2);
}

double lemma4_identity_check(const UnitaryMap &u, int samples, std::uint64_t seed) {
    if (u.dim() != 4) {
        throw std::invalid_argument("lemma4_identity_check: need a two-qubit unitary");
    }
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        auto rng = stream_rng(seed, static_cast<std::uint64_t>(k));
        CMat product = kron(random_complex_matrix(2, 2, rng), random_complex_matrix(2, 2, rng));
        CMat generic = random_complex_matrix(4, 4, rng);
        for (const CMat *rho : {&product, &generic}) {
            double dev = (conjugate_by_pt1(u, *rho) - conjugate_by_pt2_of_conjugate(u, *rho)).cwiseAbs().maxCoeff();
            worst = std::max(worst, dev);
        }
    }
    return worst;
}

const OrthogonalMap &computational_axes() {
    static const OrthogonalMap q = [] {
        Mat m = Mat::Zero(3, 3);
        m(2, 0) = 1.0;   // e1 -> e3
        m(1, 1) = -1.0;  // e2 -> -e2
        m(0, 2) = 1.0;   // e3 -> e1
        return OrthogonalMap(std::move(m));
    }();
    return q;
}

TwoGbitState to_computational_axes(const TwoGbitState &psi) {
    return local_transform(computational_axes(), computational_axes(), psi);
}

TwoGbitState from_computational_axes(const TwoGbitState &psi) {
    auto back = computational_axes().transpose();
    return local_transform(back, back, psi);
}

SchmidtCirclePoint schmidt_circle(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Vec local = Vec::Unit(3, 0) * c;
    Mat t = Mat::Zero(3, 3);
    t(0, 0) = 1.0;
    t(1, 1) = -s;
    t(2, 2) = s;
    CVec v = CVec::Zero(4);
    v(0) = std::cos(angle / 2);
    v(3) = std::sin(angle / 2);
    return {TwoGbitState(local, local, std::move(t)), std::move(v)};
}

} // namespace gbit
