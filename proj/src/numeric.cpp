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

#include "gbit/numeric.hpp"

#include <cmath>

namespace gbit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

Rng stream_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{splitmix64(seed), splitmix64(seed ^ (index + 0x632be59bd9b4e019ULL)),
                      splitmix64(index)};
    return Rng(seq);
}

Vec random_unit_vector(int d, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec v(d);
    double n = 0.0;
    // Resample the (measure-zero) degenerate draw.
    while (n < 1e-12) {
        for (int i = 0; i < d; ++i) {
            v(i) = normal(rng);
        }
        n = v.norm();
    }
    return v / n;
}

Mat random_rotation(int d, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            g(i, j) = normal(rng);
        }
    }
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        if (r(j, j) < 0) {
            q.col(j) *= -1.0;
        }
    }
    if (q.determinant() < 0) {
        q.col(0) *= -1.0;
    }
    return q;
}

CMat random_complex_matrix(int rows, int cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            double re = normal(rng);
            double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

CMat random_unitary(int n, Rng &rng) {
    CMat g = random_complex_matrix(n, n, rng);
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        double a = std::abs(r(j, j));
        if (a > 0) {
            q.col(j) *= r(j, j) / a;
        }
    }
    return q;
}

CVec random_state_vector(int n, Rng &rng) {
    CVec v = random_complex_matrix(n, 1, rng).col(0);
    return v / v.norm();
}

bool is_orthogonal(const Mat &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    Mat gram = m.transpose() * m;
    return (gram - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

} // namespace gbit
