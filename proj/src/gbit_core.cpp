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

#include "gbit/gbit_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gbit {

BlochState::BlochState(Vec x) : x_(std::move(x)) {
    if (x_.size() < 1) {
        throw std::invalid_argument("BlochState: dimension must be positive");
    }
    if (x_.norm() > 1.0 + kValidityTol) {
        throw std::domain_error("BlochState: norm " + std::to_string(x_.norm()) + " exceeds 1");
    }
}

BlochState BlochState::totally_mixed(int d) { return BlochState(Vec::Zero(d)); }

BlochState BlochState::basis(int d, int axis) {
    if (axis < 0 || axis >= d) {
        throw std::invalid_argument("BlochState::basis: axis out of range");
    }
    return BlochState(Vec::Unit(d, axis));
}

BlochState bloch_from_probs(std::span<const double> p) {
    Vec x(static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] >= 0.0 && p[i] <= 1.0)) {
            throw std::domain_error("bloch_from_probs: probability outside [0,1]");
        }
        x(static_cast<Eigen::Index>(i)) = 2.0 * p[i] - 1.0;
    }
    return BlochState(std::move(x));
}

std::vector<double> probs_from_bloch(const BlochState &state) {
    std::vector<double> p(static_cast<std::size_t>(state.d()));
    for (int i = 0; i < state.d(); ++i) {
        p[static_cast<std::size_t>(i)] = 0.5 * (1.0 + state[i]);
    }
    return p;
}

double measure_prob(const BlochState &state, const BlochState &along) {
    if (state.d() != along.d()) {
        throw std::invalid_argument("measure_prob: dimension mismatch");
    }
    if (std::abs(along.norm() - 1.0) > kValidityTol) {
        throw std::invalid_argument("measure_prob: measurement must be identified by a pure state");
    }
    return 0.5 * (1.0 + state.vec().dot(along.vec()));
}

BlochState mix(std::span<const BlochState> states, std::span<const double> weights) {
    if (states.empty() || states.size() != weights.size()) {
        throw std::invalid_argument("mix: need one weight per state");
    }
    const int d = states.front().d();
    double total = 0.0;
    Vec acc = Vec::Zero(d);
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].d() != d) {
            throw std::invalid_argument("mix: dimension mismatch");
        }
        if (weights[i] < 0.0) {
            throw std::invalid_argument("mix: negative weight");
        }
        total += weights[i];
        acc += weights[i] * states[i].vec();
    }
    if (std::abs(total - 1.0) > kValidityTol) {
        throw std::invalid_argument("mix: weights must sum to 1");
    }
    return BlochState(std::move(acc));
}

OrthogonalMap::OrthogonalMap(Mat r) : r_(std::move(r)) {
    if (!is_orthogonal(r_)) {
        throw std::invalid_argument("OrthogonalMap: matrix is not orthogonal");
    }
}

OrthogonalMap OrthogonalMap::identity(int d) { return OrthogonalMap(Mat::Identity(d, d)); }

OrthogonalMap OrthogonalMap::total_inversion(int d) { return OrthogonalMap(-Mat::Identity(d, d)); }

OrthogonalMap OrthogonalMap::plane_rotation(int d, int i, int j, double angle) {
    if (i < 0 || j < 0 || i >= d || j >= d || i == j) {
        throw std::invalid_argument("plane_rotation: bad axes");
    }
    Mat r = Mat::Identity(d, d);
    r(i, i) = std::cos(angle);
    r(j, j) = std::cos(angle);
    r(i, j) = -std::sin(angle);
    r(j, i) = std::sin(angle);
    return OrthogonalMap(std::move(r));
}

OrthogonalMap OrthogonalMap::operator*(const OrthogonalMap &other) const {
    if (d() != other.d()) {
        throw std::invalid_argument("OrthogonalMap: dimension mismatch");
    }
    return OrthogonalMap(r_ * other.r_);
}

BlochState apply_map(const OrthogonalMap &r, const BlochState &state) {
    if (r.d() != state.d()) {
        throw std::invalid_argument("apply_map: dimension mismatch");
    }
    return BlochState(r.matrix() * state.vec());
}

FiducialMetric::FiducialMetric(Mat d, double c) : d_(std::move(d)), c_(c) {
    if (d_.rows() != d_.cols() || d_.rows() == 0) {
        throw std::invalid_argument("FiducialMetric: D must be square");
    }
    if (!(c_ > 0.0)) {
        throw std::invalid_argument("FiducialMetric: scale must be positive");
    }
    if ((d_ - d_.transpose()).cwiseAbs().maxCoeff() > kValidityTol * std::max(1.0, d_.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("FiducialMetric: D must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Mat> eig(d_);
    // Eigen returns ascending order.
    eigenvalues_ = eig.eigenvalues().reverse();
    if (eigenvalues_.minCoeff() <= kValidityTol) {
        throw std::invalid_argument("FiducialMetric: D must be positive-definite");
    }
    Mat vecs = eig.eigenvectors().rowwise().reverse();
    sqrt_d_ = vecs * eigenvalues_.cwiseSqrt().asDiagonal() * vecs.transpose();
}

BlochState whiten(const FiducialMetric &metric, const Vec &raw) {
    if (raw.size() != metric.matrix().rows()) {
        throw std::invalid_argument("whiten: dimension mismatch");
    }
    return BlochState(metric.sqrt_matrix() * raw);
}

namespace {

double cross(const Eigen::Vector2d &o, const Eigen::Vector2d &a, const Eigen::Vector2d &b) {
    return (a - o).x() * (b - o).y() - (a - o).y() * (b - o).x();
}

// Andrew's monotone chain; counter-clockwise, collinear points dropped.
std::vector<Eigen::Vector2d> convex_hull(std::vector<Eigen::Vector2d> pts) {
    std::sort(pts.begin(), pts.end(), [](const auto &a, const auto &b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    if (pts.size() < 3) {
        return pts;
    }
    std::vector<Eigen::Vector2d> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto &p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) {
            --k;
        }
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        const auto &p = pts[i - 1];
        while (k >= t && cross(hull[k - 2], hull[k - 1], p) <= 0) {
            --k;
        }
        hull[k++] = p;
    }
    hull.resize(k - 1);
    return hull;
}

} // namespace

ConvexStateSpace ConvexStateSpace::polygon(std::vector<Eigen::Vector2d> vertices,
                                           std::vector<Effect> effects) {
    if (vertices.size() < 3) {
        throw std::invalid_argument("ConvexStateSpace: polygon needs at least three vertices");
    }
    auto hull = convex_hull(std::move(vertices));
    for (const auto &e : effects) {
        for (const auto &v : hull) {
            double p = e(v);
            if (p < -kValidityTol || p > 1.0 + kValidityTol) {
                throw std::invalid_argument("ConvexStateSpace: effect outside [0,1] on a state");
            }
        }
    }
    return ConvexStateSpace(Shape::polygon, std::move(hull), std::move(effects));
}

ConvexStateSpace ConvexStateSpace::unit_disc() { return ConvexStateSpace(Shape::disc, {}, {}); }

ConvexStateSpace ConvexStateSpace::toy_square() {
    std::vector<Eigen::Vector2d> v{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<Effect> e{{0.5, {0.5, 0.0}}, {0.5, {0.0, 0.5}}};
    return polygon(std::move(v), std::move(e));
}

bool ConvexStateSpace::contains(const Eigen::Vector2d &s, double tol) const {
    if (shape_ == Shape::disc) {
        return s.norm() <= 1.0 + tol;
    }
    for (std::size_t i = 0; i < hull_.size(); ++i) {
        const auto &a = hull_[i];
        const auto &b = hull_[(i + 1) % hull_.size()];
        Eigen::Vector2d edge = b - a;
        // Signed distance to the edge line; inside is to the left.
        double dist = (edge.x() * (s - a).y() - edge.y() * (s - a).x()) / edge.norm();
        if (dist < -tol) {
            return false;
        }
    }
    return true;
}

bool ConvexStateSpace::distinguishes(const Eigen::Vector2d &a, const Eigen::Vector2d &b,
                                     double tol) const {
    if (shape_ == Shape::disc) {
        // Measurement along a: certain on a, impossible on b = -a.
        return std::abs(a.norm() - 1.0) <= tol && (a + b).norm() <= tol;
    }
    for (const auto &e : effects_) {
        double pa = e(a);
        double pb = e(b);
        if ((std::abs(pa - 1.0) <= tol && std::abs(pb) <= tol) ||
            (std::abs(pa) <= tol && std::abs(pb - 1.0) <= tol)) {
            return true;
        }
    }
    return false;
}

std::optional<Decomposition> axiom1_decomposable(const ConvexStateSpace &space,
                                                 const Eigen::Vector2d &state, double tol) {
    if (!space.contains(state, tol)) {
        throw std::domain_error("axiom1_decomposable: state outside the state space");
    }
    if (space.shape() == ConvexStateSpace::Shape::disc) {
        double r = state.norm();
        Eigen::Vector2d m = r > tol ? Eigen::Vector2d(state / r) : Eigen::Vector2d(1.0, 0.0);
        return Decomposition{m, 0.5 * (1.0 + std::min(r, 1.0))};
    }
    for (const auto &m : space.vertices()) {
        // Orient m so that the weight on it is at least one half.
        if (state.dot(m) < -tol) {
            continue;
        }
        Eigen::Vector2d partner = -m;
        bool partner_pure = std::any_of(space.vertices().begin(), space.vertices().end(),
                                        [&](const auto &v) { return (v - partner).norm() <= tol; });
        if (!partner_pure || !space.distinguishes(m, partner, tol)) {
            continue;
        }
        // state = (2 eta - 1) m requires state parallel to m.
        double t = state.dot(m) / m.squaredNorm();
        if ((state - t * m).norm() <= tol) {
            return Decomposition{m, std::clamp(0.5 * (1.0 + t), 0.0, 1.0)};
        }
    }
    return std::nullopt;
}

} // namespace gbit
