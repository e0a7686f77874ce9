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

#ifndef GBIT_TESTS_ORACLES_HPP
#define GBIT_TESTS_ORACLES_HPP

// Reference implementations written without the library's matrix
// machinery: Pauli strings act on basis indices bit by bit, rotations come
// from the Rodrigues formula. Tests compare the library against these.

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "gbit/composite.hpp"

namespace oracle {

using gbit::CMat;
using gbit::Complex;
using gbit::CVec;
using gbit::Mat;
using gbit::Vec;

/// <psi| P |psi> for a Pauli string over {I, X, Y, Z}; ops[0] acts on the
/// most significant bit.
inline double pauli_expectation(const CVec &psi, const std::string &ops) {
    const int n = static_cast<int>(ops.size());
    Complex acc = 0.0;
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
        Eigen::Index target = k;
        Complex phase = 1.0;
        for (int q = 0; q < n; ++q) {
            const int bit = static_cast<int>((k >> (n - 1 - q)) & 1);
            const Eigen::Index mask = Eigen::Index{1} << (n - 1 - q);
            switch (ops[static_cast<std::size_t>(q)]) {
            case 'X':
                target ^= mask;
                break;
            case 'Y':
                target ^= mask;
                phase *= bit ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
                break;
            case 'Z':
                phase *= bit ? -1.0 : 1.0;
                break;
            default:
                break;
            }
        }
        acc += std::conj(psi(target)) * phase * psi(k);
    }
    return acc.real();
}

inline gbit::TwoGbitState bloch_of(const CVec &psi) {
    const char axes[3] = {'X', 'Y', 'Z'};
    Vec x(3), y(3);
    Mat t(3, 3);
    for (int i = 0; i < 3; ++i) {
        x(i) = pauli_expectation(psi, std::string{axes[i], 'I'});
        y(i) = pauli_expectation(psi, std::string{'I', axes[i]});
        for (int j = 0; j < 3; ++j) {
            t(i, j) = pauli_expectation(psi, std::string{axes[i], axes[j]});
        }
    }
    return {x, y, t};
}

/// 1/4 (1 + x.x' + y.y' + sum T_ij T'_ij), written out with loops.
inline double composite_prob(const gbit::TwoGbitState &a, const gbit::TwoGbitState &b) {
    double s = 1.0;
    for (int i = 0; i < a.d(); ++i) {
        s += a.x()(i) * b.x()(i) + a.y()(i) * b.y()(i);
        for (int j = 0; j < a.d(); ++j) {
            s += a.t()(i, j) * b.t()(i, j);
        }
    }
    return s / 4.0;
}

/// Rotation by `angle` about unit `n`.
inline Eigen::Matrix3d rodrigues(const Eigen::Vector3d &n, double angle) {
    Eigen::Matrix3d k;
    k << 0, -n(2), n(1), n(2), 0, -n(0), -n(1), n(0), 0;
    return Eigen::Matrix3d::Identity() + std::sin(angle) * k + (1 - std::cos(angle)) * k * k;
}

/// Partial transpose by explicit index arithmetic over an n-qubit operator.
inline CMat partial_transpose(const CMat &m, int subsystem, int qubits) {
    const Eigen::Index mask = Eigen::Index{1} << (qubits - subsystem);
    CMat out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            Eigen::Index r2 = (r & ~mask) | (c & mask);
            Eigen::Index c2 = (c & ~mask) | (r & mask);
            out(r, c) = m(r2, c2);
        }
    }
    return out;
}

/// (|001> + |010> + |100>) / sqrt3.
inline CVec w_vector() {
    CVec w = CVec::Zero(8);
    w(1) = w(2) = w(4) = 1.0 / std::sqrt(3.0);
    return w;
}

} // namespace oracle

#endif
