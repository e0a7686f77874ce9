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

#include "gbit/axiom_verifier.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <set>
#include <stdexcept>
#include <tuple>

#include <omp.h>

namespace gbit {

FlipGenerator FlipGenerator::single(int d, int i) {
    if (i <= 0 || i >= d) {
        throw std::invalid_argument("FlipGenerator::single: need 0 < i < d");
    }
    return FlipGenerator(d, {i});
}

FlipGenerator FlipGenerator::triple(int d, int j, int k, int l) {
    if (d < 4) {
        throw std::invalid_argument("FlipGenerator::triple: need d >= 4");
    }
    std::vector<int> axes{j, k, l};
    std::sort(axes.begin(), axes.end());
    if (axes[0] <= 0 || axes[2] >= d || axes[0] == axes[1] || axes[1] == axes[2]) {
        throw std::invalid_argument("FlipGenerator::triple: need distinct axes in [1, d)");
    }
    return FlipGenerator(d, std::move(axes));
}

Vec FlipGenerator::signs() const {
    Vec s = Vec::Ones(d_);
    s(0) = -1.0;
    for (int a : axes_) {
        s(a) = -1.0;
    }
    return s;
}

OrthogonalMap FlipGenerator::matrix() const { return OrthogonalMap(signs().asDiagonal().toDenseMatrix()); }

FlipSet enumerate_flips(int d, int triple_cap, std::uint64_t seed) {
    FlipSet set;
    for (int i = 1; i < d; ++i) {
        set.singles.push_back(FlipGenerator::single(d, i));
    }
    if (d < 4) {
        return set;
    }
    if (d <= 7) {
        for (int j = 1; j < d; ++j) {
            for (int k = j + 1; k < d; ++k) {
                for (int l = k + 1; l < d; ++l) {
                    set.triples.push_back(FlipGenerator::triple(d, j, k, l));
                }
            }
        }
        return set;
    }
    set.triples_sampled = true;
    auto rng = stream_rng(seed, 0x7269706c65ULL);
    std::uniform_int_distribution<int> axis(1, d - 1);
    std::set<std::tuple<int, int, int>> chosen;
    const long total = static_cast<long>(d - 1) * (d - 2) * (d - 3) / 6;
    while (static_cast<long>(chosen.size()) < std::min<long>(triple_cap, total)) {
        std::array<int, 3> t{axis(rng), axis(rng), axis(rng)};
        std::sort(t.begin(), t.end());
        if (t[0] != t[1] && t[1] != t[2]) {
            chosen.emplace(t[0], t[1], t[2]);
        }
    }
    for (const auto &[j, k, l] : chosen) {
        set.triples.push_back(FlipGenerator::triple(d, j, k, l));
    }
    return set;
}

InversionReport inversion_entanglement_contradiction(const TwoGbitState &psi) {
    if (!psi.is_pure()) {
        throw std::invalid_argument("inversion check: input must be a pure state");
    }
    const int d = psi.d();
    auto e = OrthogonalMap::total_inversion(d);
    auto id = OrthogonalMap::identity(d);
    InversionReport r{};
    r.prob_first = composite_prob(psi, local_transform(e, id, psi));
    r.prob_second = composite_prob(psi, local_transform(id, e, psi));
    r.formula_first = 0.5 * (psi.y().squaredNorm() - 1.0);
    r.formula_second = 0.5 * (psi.x().squaredNorm() - 1.0);
    r.entangled = psi.t().norm() > 1.0 + 1e-6;
    r.contradiction = r.prob_first < -kValidityTol || r.prob_second < -kValidityTol;
    return r;
}

Vec flip_constraints(const TwoGbitState &psi) {
    if (psi.d() < 3) {
        throw std::invalid_argument("flip_constraints: need d >= 3");
    }
    return flip_constraints(psi, enumerate_flips(psi.d()));
}

Vec flip_constraints(const TwoGbitState &psi, const FlipSet &flips) {
    const int d = psi.d();
    if (d < 3) {
        throw std::invalid_argument("flip_constraints: need d >= 3");
    }
    Vec rows = psi.t().rowwise().squaredNorm();
    Vec cols = psi.t().colwise().squaredNorm().transpose();
    auto side = [](const Vec &local, const Vec &lines, const FlipGenerator &f) {
        double sum = local(0) * local(0) + lines(0);
        for (int a : f.axes()) {
            sum += local(a) * local(a) + lines(a);
        }
        return sum - 2.0;
    };
    Vec out(2 * static_cast<Eigen::Index>(flips.singles.size() + flips.triples.size()));
    Eigen::Index k = 0;
    for (const auto *group : {&flips.singles, &flips.triples}) {
        for (const auto &f : *group) {
            out(k++) = side(psi.x(), rows, f);
            out(k++) = side(psi.y(), cols, f);
        }
    }
    return out;
}

FeasibilityProblem::FeasibilityProblem(int d, int triple_cap, std::uint64_t seed, bool local_positivity)
    : d_(d), flips_(enumerate_flips(d, triple_cap, seed)), basis_(SubspaceBasis::standard(d)) {
    if (d < 3) {
        throw std::invalid_argument("FeasibilityProblem: need d >= 3");
    }
    if (!local_positivity) {
        return;
    }
    for (int i = 0; i < d; ++i) {
        axes_.push_back(Vec::Unit(d, i));
    }
    const double r = std::sqrt(0.5);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            axes_.push_back(r * (Vec::Unit(d, i) + Vec::Unit(d, j)));
            axes_.push_back(r * (Vec::Unit(d, i) - Vec::Unit(d, j)));
        }
    }
}

int FeasibilityProblem::num_equalities() const {
    return 3 + 1 + 2 * static_cast<int>(flips_.singles.size() + flips_.triples.size());
}

namespace {

struct View {
    Eigen::Map<const Vec> x;
    Eigen::Map<const Vec> y;
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> t;

    View(const Vec &z, int d)
        : x(z.data(), d), y(z.data() + d, d), t(z.data() + 2 * d, d, d) {}
};

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Sign-weighted squared components: sum_i s_i (local_i^2 + lines_i).
double flip_side(const Vec &local_sq, const Vec &lines, const Vec &signs) {
    return signs.dot(local_sq + lines);
}

} // namespace

double FeasibilityProblem::objective(const Vec &z) const {
    return z.tail(d_ * d_).squaredNorm() - 1.0;
}

Vec FeasibilityProblem::equalities(const Vec &z) const {
    View v(z, d_);
    Vec out(num_equalities());
    const double xx = v.x.squaredNorm();
    const double yy = v.y.squaredNorm();
    const double tt = v.t.squaredNorm();
    out(0) = composite_prob(basis_.psi1, TwoGbitState::unflatten(d_, z)) +
             composite_prob(basis_.psi2, TwoGbitState::unflatten(d_, z)) - 1.0;
    out(1) = 0.25 * (1.0 + basis_.psi3.flatten().dot(z));
    out(2) = 0.25 * (1.0 + basis_.psi4.flatten().dot(z));
    out(3) = xx + yy + tt - 3.0;
    Vec xsq = v.x.cwiseAbs2();
    Vec ysq = v.y.cwiseAbs2();
    Vec rows = v.t.rowwise().squaredNorm();
    Vec cols = v.t.colwise().squaredNorm().transpose();
    Eigen::Index k = 4;
    for (const auto *group : {&flips_.singles, &flips_.triples}) {
        for (const auto &f : *group) {
            Vec s = f.signs();
            out(k++) = 0.25 * (1.0 + flip_side(xsq, rows, s) + yy);
            out(k++) = 0.25 * (1.0 + xx + flip_side(ysq, cols, s));
        }
    }
    return out;
}

Vec FeasibilityProblem::inequalities(const Vec &z) const {
    View v(z, d_);
    const double xx = v.x.squaredNorm();
    const double yy = v.y.squaredNorm();
    const double tt = v.t.squaredNorm();
    Vec out(num_inequalities());
    Eigen::Index k = 0;
    for (const auto &n : axes_) {
        double nx = n.dot(v.x);
        double ny = n.dot(v.y);
        double tn_left = (v.t.transpose() * n).squaredNorm();
        double tn_right = (v.t * n).squaredNorm();
        out(k++) = 0.25 * (1.0 + 2.0 * nx * nx - xx + yy + 2.0 * tn_left - tt);
        out(k++) = 0.25 * (1.0 + xx + 2.0 * ny * ny - yy + 2.0 * tn_right - tt);
    }
    return out;
}

Mat FeasibilityProblem::equality_jacobian(const Vec &z) const {
    View v(z, d_);
    const int n = num_variables();
    Mat jac = Mat::Zero(num_equalities(), n);
    jac.row(0) = 0.25 * (basis_.psi1.flatten() + basis_.psi2.flatten()).transpose();
    jac.row(1) = 0.25 * basis_.psi3.flatten().transpose();
    jac.row(2) = 0.25 * basis_.psi4.flatten().transpose();
    jac.row(3) = 2.0 * z.transpose();
    Eigen::Index k = 4;
    for (const auto *group : {&flips_.singles, &flips_.triples}) {
        for (const auto &f : *group) {
            Vec s = f.signs();
            Vec gx = Vec::Zero(n);
            Vec gy = Vec::Zero(n);
            gx.head(d_) = 0.5 * s.cwiseProduct(v.x);
            gx.segment(d_, d_) = 0.5 * v.y;
            gy.head(d_) = 0.5 * v.x;
            gy.segment(d_, d_) = 0.5 * s.cwiseProduct(v.y);
            for (int i = 0; i < d_; ++i) {
                for (int j = 0; j < d_; ++j) {
                    gx(2 * d_ + i * d_ + j) = 0.5 * s(i) * v.t(i, j);
                    gy(2 * d_ + i * d_ + j) = 0.5 * s(j) * v.t(i, j);
                }
            }
            jac.row(k++) = gx.transpose();
            jac.row(k++) = gy.transpose();
        }
    }
    return jac;
}

Mat FeasibilityProblem::inequality_jacobian(const Vec &z) const {
    View v(z, d_);
    const int n = num_variables();
    Mat jac = Mat::Zero(num_inequalities(), n);
    Eigen::Index k = 0;
    for (const auto &axis : axes_) {
        Vec tl = v.t.transpose() * axis;  // T^T n
        Vec tr = v.t * axis;              // T n
        Vec gx(n), gy(n);
        gx.head(d_) = axis.dot(v.x) * axis - 0.5 * v.x;
        gx.segment(d_, d_) = 0.5 * v.y;
        gy.head(d_) = 0.5 * v.x;
        gy.segment(d_, d_) = axis.dot(v.y) * axis - 0.5 * v.y;
        for (int i = 0; i < d_; ++i) {
            for (int j = 0; j < d_; ++j) {
                gx(2 * d_ + i * d_ + j) = axis(i) * tl(j) - 0.5 * v.t(i, j);
                gy(2 * d_ + i * d_ + j) = tr(i) * axis(j) - 0.5 * v.t(i, j);
            }
        }
        jac.row(k++) = gx.transpose();
        jac.row(k++) = gy.transpose();
    }
    return jac;
}

double FeasibilityProblem::penalty(const Vec &z, double mu, Vec *grad) const {
    View v(z, d_);
    const int n = num_variables();
    const double xx = v.x.squaredNorm();
    const double yy = v.y.squaredNorm();
    const double tt = v.t.squaredNorm();
    Vec xsq = v.x.cwiseAbs2();
    Vec ysq = v.y.cwiseAbs2();
    Vec rows = v.t.rowwise().squaredNorm();
    Vec cols = v.t.colwise().squaredNorm().transpose();

    double value = -(tt - 1.0);
    // Gradient of the quadratic-form constraints is diagonal in blocks:
    // grad_x = ax .* x, grad_y = ay .* y, grad_T_ij = (row_i + col_j) T_ij,
    // plus the dense linear S12 part and the half-turn terms.
    Vec ax = Vec::Zero(d_), ay = Vec::Zero(d_), row_w = Vec::Zero(d_), col_w = Vec::Zero(d_);
    Vec lin = Vec::Zero(n);

    auto add_linear = [&](double c, const Vec &coef) {
        value += mu * c * c;
        lin += (2.0 * mu * c) * coef;
    };
    const Vec p12 = 0.25 * (basis_.psi1.flatten() + basis_.psi2.flatten());
    const Vec p3 = 0.25 * basis_.psi3.flatten();
    const Vec p4 = 0.25 * basis_.psi4.flatten();
    add_linear(0.5 + p12.dot(z) - 1.0, p12);
    add_linear(0.25 + p3.dot(z), p3);
    add_linear(0.25 + p4.dot(z), p4);

    {
        double c = xx + yy + tt - 3.0;
        value += mu * c * c;
        double w = 2.0 * mu * c * 2.0;
        ax.array() += w;
        ay.array() += w;
        row_w.array() += w;
    }
    for (const auto *group : {&flips_.singles, &flips_.triples}) {
        for (const auto &f : *group) {
            Vec s = f.signs();
            double cx = 0.25 * (1.0 + flip_side(xsq, rows, s) + yy);
            double cy = 0.25 * (1.0 + xx + flip_side(ysq, cols, s));
            value += mu * (cx * cx + cy * cy);
            double wx = 2.0 * mu * cx * 0.5;
            double wy = 2.0 * mu * cy * 0.5;
            ax += wx * s;
            row_w += wx * s;
            ay.array() += wx;
            ay += wy * s;
            col_w += wy * s;
            ax.array() += wy;
        }
    }

    Vec gx_dense = Vec::Zero(d_), gy_dense = Vec::Zero(d_);
    RowMat gt_dense = RowMat::Zero(d_, d_);
    for (const auto &axis : axes_) {
        double nx = axis.dot(v.x);
        double ny = axis.dot(v.y);
        Vec tl = v.t.transpose() * axis;
        Vec tr = v.t * axis;
        double gl = 0.25 * (1.0 + 2.0 * nx * nx - xx + yy + 2.0 * tl.squaredNorm() - tt);
        double gr = 0.25 * (1.0 + xx + 2.0 * ny * ny - yy + 2.0 * tr.squaredNorm() - tt);
        if (gl < 0.0) {
            value += mu * gl * gl;
            double w = 2.0 * mu * gl;
            gx_dense += w * (nx * axis - 0.5 * v.x);
            gy_dense += w * 0.5 * v.y;
            gt_dense += w * (axis * tl.transpose() - 0.5 * v.t);
        }
        if (gr < 0.0) {
            value += mu * gr * gr;
            double w = 2.0 * mu * gr;
            gx_dense += w * 0.5 * v.x;
            gy_dense += w * (ny * axis - 0.5 * v.y);
            gt_dense += w * (tr * axis.transpose() - 0.5 * v.t);
        }
    }

    if (grad != nullptr) {
        grad->resize(n);
        grad->head(d_) = ax.cwiseProduct(v.x) + gx_dense;
        grad->segment(d_, d_) = ay.cwiseProduct(v.y) + gy_dense;
        for (int i = 0; i < d_; ++i) {
            for (int j = 0; j < d_; ++j) {
                (*grad)(2 * d_ + i * d_ + j) = (row_w(i) + col_w(j) - 2.0) * v.t(i, j) + gt_dense(i, j);
            }
        }
        *grad += lin;
    }
    return value;
}

double FeasibilityProblem::residual(const Vec &z) const {
    double r = equalities(z).cwiseAbs().maxCoeff();
    double g = num_inequalities() > 0 ? inequalities(z).minCoeff() : 0.0;
    return std::max(r, std::max(0.0, -g));
}

namespace {

// Gauss-Newton steps onto {c = 0, g >= 0}; violated inequalities are
// treated as equalities for the step.
void project_onto_constraints(const FeasibilityProblem &problem, Vec &z) {
    for (int iter = 0; iter < 60; ++iter) {
        Vec c = problem.equalities(z);
        Vec g = problem.inequalities(z);
        double r = std::max(c.cwiseAbs().maxCoeff(), g.size() ? std::max(0.0, -g.minCoeff()) : 0.0);
        if (r < 1e-14) {
            return;
        }
        Mat jc = problem.equality_jacobian(z);
        Mat jg = problem.inequality_jacobian(z);
        std::vector<Eigen::Index> active;
        for (Eigen::Index k = 0; k < g.size(); ++k) {
            if (g(k) < 0.0) {
                active.push_back(k);
            }
        }
        const auto m = c.size() + static_cast<Eigen::Index>(active.size());
        Mat jac(m, z.size());
        Vec rhs(m);
        jac.topRows(c.size()) = jc;
        rhs.head(c.size()) = c;
        for (std::size_t a = 0; a < active.size(); ++a) {
            jac.row(c.size() + static_cast<Eigen::Index>(a)) = jg.row(active[a]);
            rhs(c.size() + static_cast<Eigen::Index>(a)) = g(active[a]);
        }
        Eigen::CompleteOrthogonalDecomposition<Mat> cod;
        cod.setThreshold(1e-10);
        cod.compute(jac);
        Vec step = cod.solve(rhs);
        z -= step;
        if (step.norm() < 1e-16) {
            return;
        }
    }
}

Vec random_start(int n, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec z(n);
    for (int i = 0; i < n; ++i) {
        z(i) = normal(rng);
    }
    return z * (std::sqrt(3.0) / z.norm());
}

} // namespace

RestartResult run_restart(const FeasibilityProblem &problem, std::uint64_t seed, int restart,
                          const SearchOptions &options) {
    auto rng = stream_rng(seed, static_cast<std::uint64_t>(restart));
    Vec z = random_start(problem.num_variables(), rng);
    Vec grad, trial_grad;
    double mu = options.initial_penalty;
    double step = 1e-2;
    for (int round = 0; round < options.rounds; ++round, mu *= 2.0) {
        double value = problem.penalty(z, mu, &grad);
        step = std::min(step, 1.0 / mu);
        for (int it = 0; it < options.iterations_per_round; ++it) {
            double gnorm2 = grad.squaredNorm();
            if (gnorm2 < 1e-24) {
                break;
            }
            // Barzilai-Borwein trial step, monotone Armijo backtracking.
            double t = step;
            Vec trial;
            double trial_value = 0.0;
            bool accepted = false;
            for (int bt = 0; bt < 60; ++bt) {
                trial = z - t * grad;
                trial_value = problem.penalty(trial, mu, &trial_grad);
                if (trial_value <= value - 1e-4 * t * gnorm2) {
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
            if (!accepted) {
                break;
            }
            Vec s = trial - z;
            Vec yk = trial_grad - grad;
            double sy = s.dot(yk);
            step = sy > 0.0 ? std::clamp(s.squaredNorm() / sy, 1e-12, 1e3) : 2.0 * t;
            double decrease = value - trial_value;
            z = std::move(trial);
            grad = trial_grad;
            value = trial_value;
            if (decrease < 1e-15 * std::max(1.0, std::abs(value))) {
                break;
            }
        }
    }
    project_onto_constraints(problem, z);
    RestartResult result{z, problem.objective(z), problem.residual(z), false};
    result.feasible = std::isfinite(result.residual) && result.residual < kFeasibleResidual;
    return result;
}

namespace {

void validate_search(int d, int restarts) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("search_entangled_in_subspace: need odd d >= 3 (even d is excluded by inversion)");
    }
    if (restarts < 1) {
        throw std::invalid_argument("search_entangled_in_subspace: need at least one restart");
    }
}

SearchReport reduce(int d, int restarts, std::uint64_t seed, const FeasibilityProblem &problem,
                    const std::vector<RestartResult> &results) {
    SearchReport report;
    report.d = d;
    report.restarts = restarts;
    report.seed = seed;
    report.triples_sampled = problem.flips().triples_sampled;
    for (int k = 0; k < restarts; ++k) {
        const auto &r = results[static_cast<std::size_t>(k)];
        if (!r.feasible) {
            continue;
        }
        ++report.feasible_restarts;
        // Strictly greater keeps the lowest restart index on ties.
        if (report.best_restart < 0 || r.objective > results[static_cast<std::size_t>(report.best_restart)].objective) {
            report.best_restart = k;
        }
    }
    if (report.best_restart >= 0) {
        const auto &best = results[static_cast<std::size_t>(report.best_restart)];
        report.max_t_norm = std::sqrt(best.objective + 1.0);
        report.residual = best.residual;
        report.best_state = TwoGbitState::unflatten(d, best.z);
    } else {
        report.residual = std::numeric_limits<double>::infinity();
        for (const auto &r : results) {
            report.residual = std::min(report.residual, r.residual);
        }
    }
    return report;
}

} // namespace

SearchReport search_entangled_in_subspace(int d, int restarts, std::uint64_t seed, const SearchOptions &options) {
    validate_search(d, restarts);
    FeasibilityProblem problem(d, options.triple_cap, seed, options.local_positivity);
    std::vector<RestartResult> results(static_cast<std::size_t>(restarts));
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int k = 0; k < restarts; ++k) {
        results[static_cast<std::size_t>(k)] = run_restart(problem, seed, k, options);
    }
    return reduce(d, restarts, seed, problem, results);
}

SearchReport search_entangled_in_subspace_serial(int d, int restarts, std::uint64_t seed,
                                                 const SearchOptions &options) {
    validate_search(d, restarts);
    FeasibilityProblem problem(d, options.triple_cap, seed, options.local_positivity);
    std::vector<RestartResult> results;
    results.reserve(static_cast<std::size_t>(restarts));
    for (int k = 0; k < restarts; ++k) {
        results.push_back(run_restart(problem, seed, k, options));
    }
    return reduce(d, restarts, seed, problem, results);
}

PhysicalityReport check_physicality(const TwoGbitState &psi, const std::vector<TwoGbitState> &effects) {
    PhysicalityReport report{std::numeric_limits<double>::infinity(), std::nullopt};
    std::size_t argmin = 0;
    for (std::size_t k = 0; k < effects.size(); ++k) {
        double p = composite_prob(psi, effects[k]);
        if (p < report.min_probability) {
            report.min_probability = p;
            argmin = k;
        }
    }
    if (!effects.empty() && report.min_probability < -kValidityTol) {
        report.violating_index = argmin;
    }
    return report;
}

std::vector<TwoGbitState> default_effect_family(std::int64_t product_grid, std::uint64_t seed) {
    constexpr int d = 3;
    auto basis = SubspaceBasis::standard(d);
    std::vector<TwoGbitState> effects{basis.psi1, basis.psi2, basis.psi3, basis.psi4};
    // Bell states of standard quantum theory, Pauli axes.
    for (const auto &diag : {Eigen::Vector3d(1, -1, 1), Eigen::Vector3d(-1, 1, 1), Eigen::Vector3d(1, 1, -1),
                             Eigen::Vector3d(-1, -1, -1)}) {
        effects.emplace_back(Vec::Zero(d), Vec::Zero(d), diag.asDiagonal().toDenseMatrix());
    }
    for (std::int64_t k = 0; k < product_grid; ++k) {
        auto rng = stream_rng(seed, static_cast<std::uint64_t>(k));
        BlochState a(random_unit_vector(d, rng));
        BlochState b(random_unit_vector(d, rng));
        effects.push_back(product_state(a, b));
    }
    return effects;
}

} // namespace gbit
