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

#ifndef GBIT_COMPOSITE_HPP
#define GBIT_COMPOSITE_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "gbit/gbit_core.hpp"

namespace gbit {

/// State of two generalized bits: local Bloch vectors x, y and the d x d
/// correlation tensor T, T_ij = <A_i B_j>.
///
/// Construction only checks shapes. Non-physical triples (mirror states,
/// rotated candidates with |T_ij| > 1) must be representable, so the
/// physical bounds are exposed as predicates instead of constructor checks.
class TwoGbitState {
  public:
    TwoGbitState(Vec x, Vec y, Mat t);

    static TwoGbitState zero(int d);

    int d() const { return static_cast<int>(x_.size()); }
    const Vec &x() const { return x_; }
    const Vec &y() const { return y_; }
    const Mat &t() const { return t_; }

    /// ||x||^2 + ||y||^2 + ||T||_F^2; equals 3 for pure states.
    double squared_norm() const { return x_.squaredNorm() + y_.squaredNorm() + t_.squaredNorm(); }
    bool is_pure(double tol = kValidityTol) const { return std::abs(squared_norm() - 3.0) <= tol; }
    /// ||x||, ||y|| <= 1 and |T_ij| <= 1.
    bool within_bounds(double tol = kValidityTol) const;

    /// Flattened (x, y, T row-major); the probability rule is 1/4 (1 + a.b).
    Vec flatten() const;
    static TwoGbitState unflatten(int d, const Vec &z);

  private:
    Vec x_;
    Vec y_;
    Mat t_;
};

/// P12(a, b) = (1 + x_a.x_b + y_a.y_b + Tr(T_a^T T_b)) / 4. Not clamped: a
/// negative value is how inconsistent state pairs show up.
double composite_prob(const TwoGbitState &prepared, const TwoGbitState &measured);

TwoGbitState product_state(const BlochState &x, const BlochState &y);

/// Frobenius norm of T. Throws std::invalid_argument for non-pure input.
double entanglement_witness(const TwoGbitState &psi);
/// Pure product state iff ||T|| = 1.
bool is_product_by_witness(const TwoGbitState &psi, double tol = 1e-9);

/// (R1, R2)(x, y, T) = (R1 x, R2 y, R1 T R2^T).
TwoGbitState local_transform(const OrthogonalMap &r1, const OrthogonalMap &r2,
                             const TwoGbitState &psi);

struct SchmidtForm {
    OrthogonalMap r1;
    OrthogonalMap r2;
    Vec t;
};

/// R1 T R2^T = diag(t) with det R1 = det R2 = +1 and |t| sorted descending.
SchmidtForm schmidt_decompose(const TwoGbitState &psi);

/// Product basis on the shared axis e:
///   psi1 = (e, e, e e^T), psi2 = (-e, -e, e e^T),
///   psi3 = (-e, e, -e e^T), psi4 = (e, -e, -e e^T).
/// psi1, psi2 span S12; psi3, psi4 span S34.
struct SubspaceBasis {
    TwoGbitState psi1;
    TwoGbitState psi2;
    TwoGbitState psi3;
    TwoGbitState psi4;

    static SubspaceBasis along(const Vec &axis);
    static SubspaceBasis standard(int d) { return along(Vec::Unit(d, 0)); }

    int d() const { return psi1.d(); }
};

/// P(psi, psi1) + P(psi, psi2) = 1 and P(psi, psi3) = P(psi, psi4) = 0.
bool in_S12(const TwoGbitState &psi, const SubspaceBasis &basis, double tol = kSubspaceTol);
/// P(psi, psi3) + P(psi, psi4) = 1 and P(psi, psi1) = P(psi, psi2) = 0.
bool in_S34(const TwoGbitState &psi, const SubspaceBasis &basis, double tol = kSubspaceTol);

struct Lemma2Report {
    int d = 0;
    std::int64_t samples = 0;
    std::int64_t members = 0;                // samples found in S12
    std::vector<TwoGbitState> violations;    // members other than psi1, psi2
    bool passed() const { return violations.empty(); }
};

/// Sweeps pure product states (the signed axis grid plus `random_samples`
/// seeded random pairs) and records every S12 member other than psi1, psi2.
Lemma2Report lemma2_product_states_in_S12(int d, std::int64_t random_samples, std::uint64_t seed);

/// Checks that (R,1) psi and (1,R) psi both land in S34. Throws
/// std::invalid_argument unless psi is in S12 and R e1 = -e1.
bool lemma3_flip_maps_to_S34(const TwoGbitState &psi, const OrthogonalMap &r);

} // namespace gbit

#endif
