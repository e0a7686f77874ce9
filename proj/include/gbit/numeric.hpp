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

#ifndef GBIT_NUMERIC_HPP
#define GBIT_NUMERIC_HPP

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace gbit {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Validity checks (orthogonality, norms, probability ranges).
inline constexpr double kValidityTol = 1e-9;
/// Equality assertions between computed quantities.
inline constexpr double kEqualityTol = 1e-12;
/// Pure iff norm >= 1 - kPureTol.
inline constexpr double kPureTol = 1e-9;
/// Membership in the S12 / S34 subspaces, checked on optimizer output.
inline constexpr double kSubspaceTol = 1e-7;
/// A feasibility-search point is accepted below this constraint residual.
inline constexpr double kFeasibleResidual = 1e-6;

using Rng = std::mt19937_64;

/// Independent random stream for sample `index` of a run seeded with `seed`.
/// Streams depend only on (seed, index), so sweeps are reproducible no matter
/// how samples are split across threads.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform point on the unit sphere in R^d (normalized standard normal).
Vec random_unit_vector(int d, Rng &rng);

/// Haar-distributed d x d real rotation with determinant +1.
Mat random_rotation(int d, Rng &rng);

/// Haar-distributed n x n unitary (QR of a complex Ginibre matrix).
CMat random_unitary(int n, Rng &rng);

/// Normalized state vector with i.i.d. complex normal amplitudes.
CVec random_state_vector(int n, Rng &rng);

/// Complex matrix with i.i.d. standard normal real and imaginary parts.
CMat random_complex_matrix(int rows, int cols, Rng &rng);

bool is_orthogonal(const Mat &m, double tol = kValidityTol);

} // namespace gbit

#endif
