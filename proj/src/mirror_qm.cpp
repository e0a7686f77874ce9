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

#include "gbit/mirror_qm.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gbit {

namespace {

// Pauli operator s_i on qubit `site` (0-based) of three, identity elsewhere;
// index 3 stands for the identity.
CMat site_operator(int i0, int i1, int i2) {
    const CMat id = CMat::Identity(2, 2);
    auto pick = [&](int i) -> CMat { return i == 3 ? id : pauli(i); };
    return kron(kron(pick(i0), pick(i1)), pick(i2));
}

double expectation(const CMat &op, const CMat &rho) {
    return (op.transpose().cwiseProduct(rho)).sum().real();
}

} // namespace

TwoGbitState ThreeGbitMarginals::pair(int a, int b) const {
    if (a == 1 && b == 2) {
        return {x, y, t12};
    }
    if (a == 1 && b == 3) {
        return {x, z, t13};
    }
    if (a == 2 && b == 3) {
        return {y, z, t23};
    }
    throw std::invalid_argument("ThreeGbitMarginals::pair: need 1 <= a < b <= 3");
}

ThreeGbitMarginals marginals_from_density(const DensityMatrix &rho) {
    if (rho.dim() != 8) {
        throw std::invalid_argument("marginals_from_density: need a three-qubit operator");
    }
    const CMat &m = rho.matrix();
    ThreeGbitMarginals out{Vec(3), Vec(3), Vec(3), Mat(3, 3), Mat(3, 3), Mat(3, 3), {}};
    for (int i = 0; i < 3; ++i) {
        out.x(i) = expectation(site_operator(i, 3, 3), m);
        out.y(i) = expectation(site_operator(3, i, 3), m);
        out.z(i) = expectation(site_operator(3, 3, i), m);
        for (int j = 0; j < 3; ++j) {
            out.t12(i, j) = expectation(site_operator(i, j, 3), m);
            out.t13(i, j) = expectation(site_operator(i, 3, j), m);
            out.t23(i, j) = expectation(site_operator(3, i, j), m);
            for (int k = 0; k < 3; ++k) {
                out.t123[static_cast<std::size_t>(9 * i + 3 * j + k)] = expectation(site_operator(i, j, k), m);
            }
        }
    }
    return out;
}

TwoGbitState mirror_map(const TwoGbitState &psi) {
    if (psi.d() != 3) {
        throw std::invalid_argument("mirror_map: defined for d = 3");
    }
    Vec x = psi.x();
    Mat t = psi.t();
    // sigma_2 is the only antisymmetric Pauli matrix.
    x(1) = -x(1);
    t.row(1) *= -1.0;
    return {std::move(x), psi.y(), std::move(t)};
}

TwoGbitState psi_qm() {
    return {Vec::Zero(3), Vec::Zero(3), Eigen::Vector3d(1.0, -1.0, 1.0).asDiagonal().toDenseMatrix()};
}

TwoGbitState psi_mqm() { return {Vec::Zero(3), Vec::Zero(3), Mat::Identity(3, 3)}; }

TwoGbitState singlet_state() { return {Vec::Zero(3), Vec::Zero(3), -Mat::Identity(3, 3)}; }

UnitaryMap complete_unitary(const std::vector<std::pair<int, CVec>> &columns) {
    CMat u = CMat::Zero(4, 4);
    std::vector<bool> filled(4, false);
    std::vector<CVec> basis;
    for (const auto &[index, column] : columns) {
        if (index < 0 || index > 3 || filled[static_cast<std::size_t>(index)] || column.size() != 4) {
            throw std::invalid_argument("complete_unitary: bad column specification");
        }
        u.col(index) = column;
        filled[static_cast<std::size_t>(index)] = true;
        basis.push_back(column);
    }
    int candidate = 0;
    for (int index = 0; index < 4; ++index) {
        if (filled[static_cast<std::size_t>(index)]) {
            continue;
        }
        // Next computational basis vector with a nonzero orthogonal remainder.
        for (; candidate < 4; ++candidate) {
            CVec v = CVec::Unit(4, candidate);
            for (const auto &b : basis) {
                v -= b.dot(v) * b;
            }
            if (v.norm() > 1e-8) {
                v /= v.norm();
                u.col(index) = v;
                basis.push_back(v);
                ++candidate;
                break;
            }
        }
    }
    return UnitaryMap(std::move(u));
}

WStateConstruction build_w_state() {
    const double r2 = std::sqrt(0.5);
    CVec c00 = CVec::Unit(4, 0);
    CVec c01 = CVec::Zero(4);
    c01(1) = r2;  // |01>
    c01(2) = r2;  // |10>
    UnitaryMap u12 = complete_unitary({{0, c00}, {1, c01}});

    CVec d00 = CVec::Zero(4);
    d00(1) = std::sqrt(1.0 / 3.0);
    d00(2) = std::sqrt(2.0 / 3.0);
    UnitaryMap u23 = complete_unitary({{0, d00}});

    const UnitaryMap id = UnitaryMap::identity(2);
    CVec start = CVec::Unit(8, 0);
    CVec w = kron(u12, id).matrix() * (kron(id, u23).matrix() * start);
    auto marginals = marginals_from_density(DensityMatrix::from_state_vector(w));
    return {std::move(u12), std::move(u23), std::move(w), std::move(marginals)};
}

ThreeGbitMarginals mirror_w_marginals() {
    auto w = build_w_state();
    return marginals_from_density(partial_transpose(DensityMatrix::from_state_vector(w.vector), 2));
}

std::pair<OrthogonalMap, OrthogonalMap> mirror_local_equivalence() {
    return {OrthogonalMap(Eigen::Vector3d(-1.0, -1.0, 1.0).asDiagonal().toDenseMatrix()),
            OrthogonalMap::identity(3)};
}

double mirror_w_inconsistency() {
    auto [r1, r2] = mirror_local_equivalence();
    TwoGbitState psi = local_transform(r1, r2, psi_mqm());
    return composite_prob(psi, mirror_w_marginals().pair(1, 3));
}

double standard_w_min_overlap() {
    auto psi13 = build_w_state().marginals.pair(1, 3);
    double best = composite_prob(bell_states()[0], psi13);
    for (const auto &effect : bell_states()) {
        best = std::min(best, composite_prob(effect, psi13));
    }
    return best;
}

std::array<TwoGbitState, 4> bell_states() {
    const double r2 = std::sqrt(0.5);
    auto vec = [&](double a, double b, double c, double d) {
        CVec v(4);
        v << a * r2, b * r2, c * r2, d * r2;
        return bloch_from_state_vector(v);
    };
    return {vec(1, 0, 0, 1), vec(1, 0, 0, -1), vec(0, 1, 1, 0), vec(0, 1, -1, 0)};
}

std::array<std::string, 4> bell_labels() { return {"phi+", "phi-", "psi+", "psi-"}; }

CorrelationTables bell_correlation_tables() {
    CorrelationTables tables;
    tables.labels = bell_labels();
    auto states = bell_states();
    auto sign = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    for (std::size_t b = 0; b < states.size(); ++b) {
        auto mirrored = mirror_map(states[b]);
        for (int k = 0; k < 3; ++k) {
            tables.standard[b][static_cast<std::size_t>(k)] = sign(states[b].t()(k, k));
            tables.mirror[b][static_cast<std::size_t>(k)] = sign(mirrored.t()(k, k));
        }
    }
    return tables;
}

std::string render_tables(const CorrelationTables &tables) {
    std::ostringstream out;
    auto cell = [](int s) { return s > 0 ? " +1" : (s < 0 ? " -1" : "  0"); };
    out << "standard QM              mirror QM\n";
    out << "         x   y   z                x   y   z\n";
    for (std::size_t b = 0; b < tables.labels.size(); ++b) {
        std::string label = tables.labels[b];
        label.resize(6, ' ');
        out << label << "  ";
        for (int s : tables.standard[b]) {
            out << cell(s) << ' ';
        }
        out << "     " << label << "  ";
        for (int s : tables.mirror[b]) {
            out << cell(s) << ' ';
        }
        out << '\n';
    }
    return out.str();
}

DensityMatrix MirrorTransform::apply(const DensityMatrix &rho) const {
    CMat out = apply(rho.matrix());
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

MirrorTransform mirror_group_conjugation(const UnitaryMap &u) {
    if (u.dim() != 4) {
        throw std::invalid_argument("mirror_group_conjugation: need a two-qubit unitary");
    }
    return MirrorTransform(u);
}

MirrorReport build_mirror_report() {
    return {bell_correlation_tables(), build_w_state().marginals, mirror_w_marginals(), mirror_w_inconsistency(),
            standard_w_min_overlap()};
}

namespace {

void compare_vector(std::vector<std::string> &out, const std::string &name, const Vec &got, const Vec &want,
                    double tol) {
    if ((got - want).cwiseAbs().maxCoeff() > tol) {
        std::ostringstream msg;
        msg << name << ": got [" << got.transpose() << "], want [" << want.transpose() << "]";
        out.push_back(msg.str());
    }
}

void compare_diagonal(std::vector<std::string> &out, const std::string &name, const Mat &got, const Vec &want,
                      double tol) {
    if ((got - Mat(want.asDiagonal())).cwiseAbs().maxCoeff() > tol) {
        std::ostringstream msg;
        msg << name << ": got diag [" << got.diagonal().transpose() << "], want diag [" << want.transpose() << "]";
        out.push_back(msg.str());
    }
}

} // namespace

std::vector<std::string> mirror_report_deviations(const MirrorReport &report, double tol) {
    std::vector<std::string> out;
    const Vec local = Eigen::Vector3d(0.0, 0.0, 1.0 / 3.0);
    const Vec even = Eigen::Vector3d(2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0);
    const Vec odd = Eigen::Vector3d(2.0 / 3.0, -2.0 / 3.0, -1.0 / 3.0);
    for (const auto &[prefix, m] : {std::pair<std::string, const ThreeGbitMarginals *>{"W", &report.w},
                                    std::pair<std::string, const ThreeGbitMarginals *>{"mirror W", &report.mirror_w}}) {
        compare_vector(out, prefix + " x", m->x, local, tol);
        compare_vector(out, prefix + " y", m->y, local, tol);
        compare_vector(out, prefix + " z", m->z, local, tol);
    }
    compare_diagonal(out, "W T12", report.w.t12, even, tol);
    compare_diagonal(out, "W T13", report.w.t13, even, tol);
    compare_diagonal(out, "W T23", report.w.t23, even, tol);
    compare_diagonal(out, "mirror W T12", report.mirror_w.t12, odd, tol);
    compare_diagonal(out, "mirror W T13", report.mirror_w.t13, even, tol);
    compare_diagonal(out, "mirror W T23", report.mirror_w.t23, odd, tol);

    const std::array<int, 3> phi_plus{1, -1, 1};
    const std::array<int, 3> mirror_phi_plus{1, 1, 1};
    const std::array<int, 3> singlet{-1, -1, -1};
    for (std::size_t b = 0; b < 4; ++b) {
        const auto &s = report.tables.standard[b];
        const auto &m = report.tables.mirror[b];
        if (s[0] * s[1] * s[2] != -1) {
            out.push_back("standard row " + report.tables.labels[b] + ": sign product is not -1");
        }
        if (m[0] * m[1] * m[2] != 1) {
            out.push_back("mirror row " + report.tables.labels[b] + ": sign product is not +1");
        }
    }
    if (report.tables.standard[0] != phi_plus) {
        out.push_back("standard phi+ row is not (+1, -1, +1)");
    }
    if (report.tables.mirror[0] != mirror_phi_plus) {
        out.push_back("mirror phi+ row is not (+1, +1, +1)");
    }
    if (report.tables.standard[3] != singlet) {
        out.push_back("singlet row is not (-1, -1, -1)");
    }
    if (std::abs(report.overlap + 1.0 / 6.0) > tol) {
        out.push_back("mirror W overlap: got " + std::to_string(report.overlap) + ", want -1/6");
    }
    if (report.standard_min_overlap < -tol) {
        out.push_back("standard W overlap is negative: " + std::to_string(report.standard_min_overlap));
    }
    return out;
}

} // namespace gbit
