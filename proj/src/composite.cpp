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

#include "gbit/composite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gbit {

TwoGbitState::TwoGbitState(Vec x, Vec y, Mat t) : x_(std::move(x)), y_(std::move(y)), t_(std::move(t)) {
    const auto d = x_.size();
    if (d < 1 || y_.size() != d || t_.rows() != d || t_.cols() != d) {
        throw std::invalid_argument("TwoGbitState: inconsistent shapes");
    }
}

TwoGbitState TwoGbitState::zero(int d) { return {Vec::Zero(d), Vec::Zero(d), Mat::Zero(d, d)}; }

bool TwoGbitState::within_bounds(double tol) const {
    return x_.norm() <= 1.0 + tol && y_.norm() <= 1.0 + tol && t_.cwiseAbs().maxCoeff() <= 1.0 + tol;
}

Vec TwoGbitState::flatten() const {
    const int n = d();
    Vec z(2 * n + n * n);
    z.head(n) = x_;
    z.segment(n, n) = y_;
    for (int i = 0; i < n; ++i) {
        z.segment(2 * n + i * n, n) = t_.row(i).transpose();
    }
    return z;
}

TwoGbitState TwoGbitState::unflatten(int d, const Vec &z) {
    if (z.size() != 2 * d + d * d) {
        throw std::invalid_argument("TwoGbitState::unflatten: wrong length");
    }
    Mat t(d, d);
    for (int i = 0; i < d; ++i) {
        t.row(i) = z.segment(2 * d + i * d, d).transpose();
    }
    return {z.head(d), z.segment(d, d), std::move(t)};
}

double composite_prob(const TwoGbitState &prepared, const TwoGbitState &measured) {
    if (prepared.d() != measured.d()) {
        throw std::invalid_argument("composite_prob: dimension mismatch");
    }
    return 0.25 * (1.0 + prepared.x().dot(measured.x()) + prepared.y().dot(measured.y()) +
                   prepared.t().cwiseProduct(measured.t()).sum());
}

TwoGbitState product_state(const BlochState &x, const BlochState &y) {
    if (x.d() != y.d()) {
        throw std::invalid_argument("product_state: dimension mismatch");
    }
    return {x.vec(), y.vec(), x.vec() * y.vec().transpose()};
}

double entanglement_witness(const TwoGbitState &psi) {
    if (!psi.is_pure()) {
        throw std::invalid_argument("entanglement_witness: defined for pure states only");
    }
    return psi.t().norm();
}

bool is_product_by_witness(const TwoGbitState &psi, double tol) {
    return std::abs(entanglement_witness(psi) - 1.0) < tol;
}

TwoGbitState local_transform(const OrthogonalMap &r1, const OrthogonalMap &r2, const TwoGbitState &psi) {
    if (r1.d() != psi.d() || r2.d() != psi.d()) {
        throw std::invalid_argument("local_transform: dimension mismatch");
    }
    return {r1.matrix() * psi.x(), r2.matrix() * psi.y(), r1.matrix() * psi.t() * r2.matrix().transpose()};
}

SchmidtForm schmidt_decompose(const TwoGbitState &psi) {
    const int d = psi.d();
    Eigen::JacobiSVD<Mat> svd(psi.t(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat u = svd.matrixU();
    Mat v = svd.matrixV();
    Vec s = svd.singularValues();

    // Descending singular values; near-ties ordered lexicographically by the
    // left singular vectors so degenerate tensors decompose deterministically.
    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (std::abs(s(a) - s(b)) > 1e-12 * scale) {
            return s(a) > s(b);
        }
        for (int k = 0; k < d; ++k) {
            if (std::abs(u(k, a) - u(k, b)) > 1e-12) {
                return u(k, a) < u(k, b);
            }
        }
        return false;
    });
    Mat us(d, d), vs(d, d);
    Vec t(d);
    for (int k = 0; k < d; ++k) {
        us.col(k) = u.col(order[static_cast<std::size_t>(k)]);
        vs.col(k) = v.col(order[static_cast<std::size_t>(k)]);
        t(k) = s(order[static_cast<std::size_t>(k)]);
    }
    // T = U diag(t) V^T; flipping column k of U or V together with t_k
    // leaves T unchanged, so fold a -1 determinant into the last value.
    if (us.determinant() < 0) {
        us.col(d - 1) *= -1.0;
        t(d - 1) *= -1.0;
    }
    if (vs.determinant() < 0) {
        vs.col(d - 1) *= -1.0;
        t(d - 1) *= -1.0;
    }
    return SchmidtForm{OrthogonalMap(us.transpose()), OrthogonalMap(vs.transpose()), std::move(t)};
}

SubspaceBasis SubspaceBasis::along(const Vec &axis) {
    if (std::abs(axis.norm() - 1.0) > kValidityTol) {
        throw std::invalid_argument("SubspaceBasis: axis must be a unit vector");
    }
    Mat t0 = axis * axis.transpose();
    return SubspaceBasis{TwoGbitState(axis, axis, t0), TwoGbitState(-axis, -axis, t0),
                         TwoGbitState(-axis, axis, -t0), TwoGbitState(axis, -axis, -t0)};
}

bool in_S12(const TwoGbitState &psi, const SubspaceBasis &basis, double tol) {
    double p1 = composite_prob(psi, basis.psi1);
    double p2 = composite_prob(psi, basis.psi2);
    double p3 = composite_prob(psi, basis.psi3);
    double p4 = composite_prob(psi, basis.psi4);
    return std::abs(p1 + p2 - 1.0) <= tol && std::abs(p3) <= tol && std::abs(p4) <= tol;
}

bool in_S34(const TwoGbitState &psi, const SubspaceBasis &basis, double tol) {
    double p1 = composite_prob(psi, basis.psi1);
    double p2 = composite_prob(psi, basis.psi2);
    double p3 = composite_prob(psi, basis.psi3);
    double p4 = composite_prob(psi, basis.psi4);
    return std::abs(p3 + p4 - 1.0) <= tol && std::abs(p1) <= tol && std::abs(p2) <= tol;
}

namespace {

bool same_state(const TwoGbitState &a, const TwoGbitState &b, double tol) {
    return (a.flatten() - b.flatten()).cwiseAbs().maxCoeff() <= tol;
}

void classify_sample(const TwoGbitState &psi, const SubspaceBasis &basis, Lemma2Report &report) {
    ++report.samples;
    if (!in_S12(psi, basis)) {
        return;
    }
    ++report.members;
    if (!same_state(psi, basis.psi1, 1e-6) && !same_state(psi, basis.psi2, 1e-6)) {
        report.violations.push_back(psi);
    }
}

} // namespace

Lemma2Report lemma2_product_states_in_S12(int d, std::int64_t random_samples, std::uint64_t seed) {
    if (d < 1) {
        throw std::invalid_argument("product-state sweep: d must be positive");
    }
    const auto basis = SubspaceBasis::standard(d);
    Lemma2Report report;
    report.d = d;

    // Grid: every pair of signed axis states.
    for (int i = 0; i < 2 * d; ++i) {
        for (int j = 0; j < 2 * d; ++j) {
            Vec a = Vec::Unit(d, i / 2) * (i % 2 ? -1.0 : 1.0);
            Vec b = Vec::Unit(d, j / 2) * (j % 2 ? -1.0 : 1.0);
            classify_sample(product_state(BlochState(a), BlochState(b)), basis, report);
        }
    }
    // The sweep is cheap and the violation list must come out in sample
    // order, so it stays serial.
    for (std::int64_t k = 0; k < random_samples; ++k) {
        auto rng = stream_rng(seed, static_cast<std::uint64_t>(k));
        BlochState a(random_unit_vector(d, rng));
        BlochState b(random_unit_vector(d, rng));
        classify_sample(product_state(a, b), basis, report);
    }
    return report;
}

bool lemma3_flip_maps_to_S34(const TwoGbitState &psi, const OrthogonalMap &r) {
    const int d = psi.d();
    if (r.d() != d) {
        throw std::invalid_argument("flip check: dimension mismatch");
    }
    Vec e1 = Vec::Unit(d, 0);
    if ((r.matrix() * e1 + e1).cwiseAbs().maxCoeff() > kValidityTol) {
        throw std::invalid_argument("flip check: R must map e1 to -e1");
    }
    const auto basis = SubspaceBasis::standard(d);
    if (!in_S12(psi, basis)) {
        throw std::invalid_argument("flip check: input state must lie in S12");
    }
    auto id = OrthogonalMap::identity(d);
    return in_S34(local_transform(r, id, psi), basis) && in_S34(local_transform(id, r, psi), basis);
}

} // namespace gbit
