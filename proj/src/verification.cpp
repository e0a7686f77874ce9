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

#include "gbit/verification.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "sweep.hpp"

namespace gbit {

using detail::sweep_max;
using detail::sweep_min;

double normalization_sweep(std::int64_t samples, std::uint64_t seed, Exec exec) {
    return sweep_max(samples, seed, exec, [](Rng &rng) {
        auto psi = bloch_from_state_vector(random_state_vector(4, rng));
        return std::abs(psi.squared_norm() - 3.0);
    });
}

double product_witness_sweep(std::int64_t samples, std::uint64_t seed, Exec exec) {
    return sweep_max(samples, seed, exec, [](Rng &rng) {
        BlochState a(random_unit_vector(3, rng));
        BlochState b(random_unit_vector(3, rng));
        return std::abs(entanglement_witness(product_state(a, b)) - 1.0);
    });
}

TwoGbitState random_entangled_state(Rng &rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double a = angle(rng);
    while (std::abs(std::sin(a)) < 0.01) {
        a = angle(rng);
    }
    OrthogonalMap r1(random_rotation(3, rng));
    OrthogonalMap r2(random_rotation(3, rng));
    return local_transform(r1, r2, schmidt_circle(a).state);
}

EntangledSweep entangled_witness_sweep(std::int64_t samples, std::uint64_t seed, Exec exec) {
    EntangledSweep out{};
    out.min_t_norm = sweep_min(samples, seed, exec, [](Rng &rng) {
        return entanglement_witness(random_entangled_state(rng));
    });
    out.min_factor_gap = sweep_min(samples, seed, exec, [](Rng &rng) {
        auto psi = random_entangled_state(rng);
        return (psi.t() - psi.x() * psi.y().transpose()).norm();
    });
    out.max_norm_deviation = sweep_max(samples, seed, exec, [](Rng &rng) {
        return std::abs(random_entangled_state(rng).squared_norm() - 3.0);
    });
    return out;
}

double oracle_equivalence_sweep(std::int64_t samples, std::uint64_t seed, Exec exec) {
    return sweep_max(samples, seed, exec, [](Rng &rng) {
        CVec phi = random_state_vector(4, rng);
        CVec psi = random_state_vector(4, rng);
        double direct = std::norm(phi.dot(psi));
        double bloch = composite_prob(bloch_from_state_vector(phi), bloch_from_state_vector(psi));
        return std::abs(direct - bloch);
    });
}

double lemma4_sweep(std::int64_t unitaries, int operators, std::uint64_t seed, Exec exec) {
    return sweep_max(unitaries, seed, exec, [operators](Rng &rng) {
        UnitaryMap u(random_unitary(4, rng));
        std::uint64_t inner = rng();
        return lemma4_identity_check(u, operators, inner);
    });
}

HomomorphismSweep homomorphism_sweep(std::int64_t pairs, std::uint64_t seed, Exec exec) {
    struct Pair {
        OrthogonalMap r1, r2, r12;
    };
    auto draw = [](Rng &rng) {
        UnitaryMap u1(random_unitary(2, rng));
        UnitaryMap u2(random_unitary(2, rng));
        return Pair{su2_to_so3(u1), su2_to_so3(u2), su2_to_so3(u1 * u2)};
    };
    HomomorphismSweep out{};
    out.max_homomorphism_deviation = sweep_max(pairs, seed, exec, [&](Rng &rng) {
        auto p = draw(rng);
        return (p.r12.matrix() - p.r1.matrix() * p.r2.matrix()).cwiseAbs().maxCoeff();
    });
    out.max_orthogonality_deviation = sweep_max(pairs, seed, exec, [&](Rng &rng) {
        auto p = draw(rng);
        double worst = 0.0;
        for (const auto *r : {&p.r1, &p.r2, &p.r12}) {
            worst = std::max(worst, (r->matrix().transpose() * r->matrix() - Mat::Identity(3, 3)).cwiseAbs().maxCoeff());
        }
        return worst;
    });
    out.min_determinant = sweep_min(pairs, seed, exec, [&](Rng &rng) {
        auto p = draw(rng);
        return std::min({p.r1.determinant(), p.r2.determinant(), p.r12.determinant()});
    });
    return out;
}

InversionSweep inversion_sweep(std::int64_t samples, std::uint64_t seed, Exec exec) {
    InversionSweep out{};
    out.max_formula_deviation = sweep_max(samples, seed, exec, [](Rng &rng) {
        auto r = inversion_entanglement_contradiction(bloch_from_state_vector(random_state_vector(4, rng)));
        return std::max(std::abs(r.prob_first - r.formula_first), std::abs(r.prob_second - r.formula_second));
    });
    out.max_probability = sweep_max(samples, seed, exec, [](Rng &rng) {
        auto r = inversion_entanglement_contradiction(bloch_from_state_vector(random_state_vector(4, rng)));
        return r.prob_first;
    });
    return out;
}

std::int64_t disc_decomposition_failures(std::int64_t samples, std::uint64_t seed, Exec exec) {
    const auto disc = ConvexStateSpace::unit_disc();
    double failures = detail::sweep_reduce(
        samples, seed, exec, 0.0, static_cast<double>(samples), [](double a, double b) { return a + b; },
        [&](Rng &rng) {
            std::uniform_real_distribution<double> u(0.0, 1.0);
            Eigen::Vector2d s = random_unit_vector(2, rng) * std::sqrt(u(rng));
            auto w = axiom1_decomposable(disc, s);
            if (!w) {
                return 1.0;
            }
            Eigen::Vector2d rebuilt = w->weight * w->pure - (1.0 - w->weight) * w->pure;
            return (rebuilt - s).norm() <= kValidityTol ? 0.0 : 1.0;
        });
    return static_cast<std::int64_t>(failures);
}

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out << std::setprecision(3) << std::scientific << v;
    return out.str();
}

CheckResult below(std::string name, double value, double tol) {
    return {std::move(name), value < tol, false, "max deviation " + fmt(value) + " (tol " + fmt(tol) + ")"};
}

} // namespace

std::vector<CheckResult> run_all_checks(std::uint64_t seed, std::int64_t samples) {
    std::vector<CheckResult> out;

    out.push_back(below("normalization identity", normalization_sweep(samples, seed), 1e-9));
    out.push_back(below("product states saturate ||T|| = 1", product_witness_sweep(samples, seed + 1), 1e-12));
    {
        auto e = entangled_witness_sweep(samples, seed + 2);
        bool ok = e.min_t_norm > 1.0 + 1e-6 && e.min_factor_gap > 0.0 && e.max_norm_deviation < 1e-9;
        out.push_back({"entangled states have ||T|| > 1", ok, false, "min ||T|| - 1 " + fmt(e.min_t_norm - 1.0)});
    }
    {
        auto r = lemma2_product_states_in_S12(3, samples, seed + 3);
        out.push_back({"only psi1, psi2 are product states in S12", r.passed(), false,
                       std::to_string(r.members) + " members in " + std::to_string(r.samples) + " samples"});
    }
    {
        auto flip = FlipGenerator::single(3, 1).matrix();
        bool ok = lemma3_flip_maps_to_S34(SubspaceBasis::standard(3).psi1, flip) &&
                  lemma3_flip_maps_to_S34(psi_qm(), flip);
        out.push_back({"flips map S12 into S34", ok, false, "psi1 and psi_QM"});
    }
    out.push_back(below("PT1 U PT1 = PT2 U* PT2", lemma4_sweep(100, 10, seed + 4), 1e-12));
    {
        auto h = homomorphism_sweep(100, seed + 5);
        bool ok = h.max_homomorphism_deviation < 1e-12 && h.max_orthogonality_deviation < 1e-12 &&
                  std::abs(h.min_determinant - 1.0) < 1e-12;
        out.push_back({"SU(2) -> SO(3) homomorphism", ok, false, "max deviation " + fmt(h.max_homomorphism_deviation)});
    }
    out.push_back(below("oracle equivalence with state vectors", oracle_equivalence_sweep(samples, seed + 6), 1e-12));
    {
        auto inv = inversion_sweep(100, seed + 7);
        bool ok = inv.max_formula_deviation < 1e-12 && inv.max_probability < 0.0;
        out.push_back({"total inversion forbids entanglement", ok, false,
                       "max P(psi,(E,1)psi) " + fmt(inv.max_probability)});
    }
    {
        auto witness = axiom1_decomposable(ConvexStateSpace::toy_square(), Eigen::Vector2d(0.5, 0.5));
        out.push_back({"decomposability in the square toy world", !witness.has_value(), true,
                       "state (x1 + x2)/2 is not a mixture of two distinguishable states"});
    }
    {
        auto failures = disc_decomposition_failures(1000, seed + 8);
        out.push_back({"decomposability in the disc", failures == 0, false, std::to_string(failures) + " failures in 1000"});
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 64; ++k) {
            auto p = schmidt_circle(2.0 * std::numbers::pi * k / 64.0);
            auto rho = density_from_bloch(to_computational_axes(p.state));
            worst = std::max(worst, (rho.matrix() - p.vector * p.vector.adjoint()).cwiseAbs().maxCoeff());
        }
        out.push_back(below("Schmidt circle matches |psi(x)>", worst, 1e-12));
    }
    {
        auto w = build_w_state();
        auto m = mirror_w_marginals();
        Vec local = Eigen::Vector3d(0.0, 0.0, 1.0 / 3.0);
        Mat tw = Eigen::Vector3d(2.0 / 3, 2.0 / 3, -1.0 / 3).asDiagonal().toDenseMatrix();
        Mat tm = Eigen::Vector3d(2.0 / 3, -2.0 / 3, -1.0 / 3).asDiagonal().toDenseMatrix();
        double dev = 0.0;
        for (const auto *v : {&w.marginals.x, &w.marginals.y, &w.marginals.z, &m.x, &m.y, &m.z}) {
            dev = std::max(dev, (*v - local).cwiseAbs().maxCoeff());
        }
        for (const auto *t : {&w.marginals.t12, &w.marginals.t13, &w.marginals.t23, &m.t13}) {
            dev = std::max(dev, (*t - tw).cwiseAbs().maxCoeff());
        }
        dev = std::max({dev, (m.t12 - tm).cwiseAbs().maxCoeff(), (m.t23 - tm).cwiseAbs().maxCoeff()});
        out.push_back(below("W and mirror-W marginals", dev, 1e-12));
    }
    {
        double p = mirror_w_inconsistency();
        out.push_back({"mirror W negative probability -1/6", std::abs(p + 1.0 / 6.0) < 1e-12, false,
                       "P = " + fmt(p)});
    }
    {
        auto tables = bell_correlation_tables();
        bool ok = true;
        for (std::size_t b = 0; b < 4; ++b) {
            int ps = tables.standard[b][0] * tables.standard[b][1] * tables.standard[b][2];
            int pm = tables.mirror[b][0] * tables.mirror[b][1] * tables.mirror[b][2];
            ok = ok && ps == -1 && pm == 1;
        }
        out.push_back({"Bell correlation sign tables", ok, false, "standard rows odd, mirror rows even"});
    }
    {
        double worst = detail::sweep_max(100, seed + 9, Exec::serial, [](Rng &rng) {
            std::normal_distribution<double> g(0.0, 0.3);
            Mat t = Mat::NullaryExpr(5, 5, [&]() { return g(rng); });
            TwoGbitState psi(random_unit_vector(5, rng) * 0.5, random_unit_vector(5, rng) * 0.5, t);
            auto flips = enumerate_flips(5);
            Vec res = flip_constraints(psi, flips);
            double excess = 0.5 * (psi.squared_norm() - 3.0);
            auto id = OrthogonalMap::identity(5);
            double w = 0.0;
            Eigen::Index k = 0;
            for (const auto *group : {&flips.singles, &flips.triples}) {
                for (const auto &f : *group) {
                    auto r = f.matrix();
                    double px = composite_prob(psi, local_transform(r, id, psi));
                    double py = composite_prob(psi, local_transform(id, r, psi));
                    w = std::max(w, std::abs(res(k++) - (excess - 2.0 * px)));
                    w = std::max(w, std::abs(res(k++) - (excess - 2.0 * py)));
                }
            }
            return w;
        });
        out.push_back(below("flip residuals expand 2 P(psi, flip image)", worst, 1e-9));
    }
    return out;
}

} // namespace gbit
