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

#ifndef GBIT_GBIT_CORE_HPP
#define GBIT_GBIT_CORE_HPP

#include <optional>
#include <span>
#include <vector>

#include "gbit/numeric.hpp"

namespace gbit {

/// State of a single generalized bit in Bloch form. Component i is the mean
/// value 2 p_i - 1 of the i-th fiducial measurement. The state space is the
/// unit ball; pure states lie on the sphere.
class BlochState {
  public:
    /// Throws std::domain_error if the norm exceeds one (beyond tolerance).
    explicit BlochState(Vec x);

    static BlochState totally_mixed(int d);
    /// Unit vector along axis `axis` (0-based).
    static BlochState basis(int d, int axis);

    int d() const { return static_cast<int>(x_.size()); }
    const Vec &vec() const { return x_; }
    double operator[](int i) const { return x_(i); }
    double norm() const { return x_.norm(); }
    bool is_pure() const { return x_.norm() >= 1.0 - kPureTol; }

    /// The orthogonal (perfectly distinguishable) state -x.
    BlochState orthogonal() const { return BlochState(-x_); }

  private:
    Vec x_;
};

BlochState bloch_from_probs(std::span<const double> p);
std::vector<double> probs_from_bloch(const BlochState &state);

/// Probability of the outcome identified by the pure state `along` when
/// `state` is prepared: (1 + x1.x2) / 2.
double measure_prob(const BlochState &state, const BlochState &along);

/// Convex mixture sum_i w_i x_i.
BlochState mix(std::span<const BlochState> states, std::span<const double> weights);

/// Reversible transformation of a single generalized bit.
class OrthogonalMap {
  public:
    /// Throws std::invalid_argument unless R^T R = 1 within kValidityTol.
    explicit OrthogonalMap(Mat r);

    static OrthogonalMap identity(int d);
    /// The total inversion x -> -x.
    static OrthogonalMap total_inversion(int d);
    /// Rotation by `angle` in the plane spanned by axes i and j.
    static OrthogonalMap plane_rotation(int d, int i, int j, double angle);

    int d() const { return static_cast<int>(r_.rows()); }
    const Mat &matrix() const { return r_; }
    double determinant() const { return r_.determinant(); }
    /// Member of SO(d); only these can be physical transformations.
    bool is_special() const { return determinant() > 0.0; }

    OrthogonalMap operator*(const OrthogonalMap &other) const;
    OrthogonalMap transpose() const { return OrthogonalMap(r_.transpose()); }

  private:
    Mat r_;
};

BlochState apply_map(const OrthogonalMap &r, const BlochState &state);

/// Positive-definite metric D = S^T S / c^2 of the raw fiducial coordinates.
class FiducialMetric {
  public:
    /// Throws std::invalid_argument unless D is symmetric positive-definite.
    explicit FiducialMetric(Mat d, double c = 1.0);

    const Mat &matrix() const { return d_; }
    double scale() const { return c_; }
    /// Eigenvalues of D, sorted descending.
    const Vec &eigenvalues() const { return eigenvalues_; }
    /// Symmetric square root of D.
    const Mat &sqrt_matrix() const { return sqrt_d_; }
    /// S = c D^{1/2}.
    Mat s_matrix() const { return c_ * sqrt_d_; }

  private:
    Mat d_;
    double c_;
    Vec eigenvalues_;
    Mat sqrt_d_;
};

/// Coordinates y = S x / c in which the pure states form the unit sphere.
BlochState whiten(const FiducialMetric &metric, const Vec &raw);

/// Affine two-dimensional state space used to probe the decomposability
/// requirement: every state must be a mixture of two perfectly
/// distinguishable pure states.
class ConvexStateSpace {
  public:
    enum class Shape { polygon, disc };

    /// An outcome with probability offset + slope . s; its partner outcome is
    /// the complement 1 - (offset + slope . s).
    struct Effect {
        double offset;
        Eigen::Vector2d slope;
        double operator()(const Eigen::Vector2d &s) const { return offset + slope.dot(s); }
    };

    /// Polygon whose pure states are `vertices`. Throws std::invalid_argument
    /// if an effect leaves [0,1] on a vertex.
    static ConvexStateSpace polygon(std::vector<Eigen::Vector2d> vertices,
                                    std::vector<Effect> effects);
    /// Unit disc; every pure state is distinguished from its antipode.
    static ConvexStateSpace unit_disc();
    /// Square toy world with pure states e1, e2, -e1, -e2 and only the two
    /// measurements separating {e1, -e1} and {e2, -e2}.
    static ConvexStateSpace toy_square();

    Shape shape() const { return shape_; }
    /// Vertices of the convex hull, counter-clockwise. Empty for the disc.
    const std::vector<Eigen::Vector2d> &vertices() const { return hull_; }
    const std::vector<Effect> &effects() const { return effects_; }

    bool contains(const Eigen::Vector2d &s, double tol = kValidityTol) const;
    /// Whether some effect outcome is certain on `a` and impossible on `b`.
    bool distinguishes(const Eigen::Vector2d &a, const Eigen::Vector2d &b,
                       double tol = kValidityTol) const;

  private:
    ConvexStateSpace(Shape shape, std::vector<Eigen::Vector2d> hull, std::vector<Effect> effects)
        : shape_(shape), hull_(std::move(hull)), effects_(std::move(effects)) {}

    Shape shape_;
    std::vector<Eigen::Vector2d> hull_;
    std::vector<Effect> effects_;
};

struct Decomposition {
    Eigen::Vector2d pure;  // m; the partner is -m
    double weight;         // eta in state = eta m + (1 - eta)(-m)
};

/// Returns the witness decomposition if the state is a mixture of a pure
/// state and its perfectly distinguishable antipode, nullopt otherwise.
/// Throws std::domain_error for states outside the space.
std::optional<Decomposition> axiom1_decomposable(const ConvexStateSpace &space,
                                                 const Eigen::Vector2d &state,
                                                 double tol = kValidityTol);

} // namespace gbit

#endif
