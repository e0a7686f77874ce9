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

// Acceptance runner: one PASS/FAIL line per criterion, each timed against
// its runtime budget. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gbit/cli.hpp"
#include "gbit/json_io.hpp"
#include "gbit/verification.hpp"

using namespace gbit;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    int id;
    const char *name;
    double budget_s;
    std::function<Outcome()> run;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

double diag_dev(const Mat &t, double a, double b, double c) {
    return (t - Mat(Eigen::Vector3d(a, b, c).asDiagonal())).cwiseAbs().maxCoeff();
}

Outcome mirror_negative_probability() {
    double p = mirror_w_inconsistency();
    return {std::abs(p + 1.0 / 6.0) < 1e-12, "P = " + format_number(p)};
}

Outcome w_marginals() {
    auto w = build_w_state().marginals;
    auto m = mirror_w_marginals();
    const Vec local = Eigen::Vector3d(0, 0, 1.0 / 3.0);
    double dev = 0.0;
    for (const auto *v : {&w.x, &w.y, &w.z, &m.x, &m.y, &m.z}) {
        dev = std::max(dev, (*v - local).cwiseAbs().maxCoeff());
    }
    for (const auto *t : {&w.t12, &w.t13, &w.t23, &m.t13}) {
        dev = std::max(dev, diag_dev(*t, 2.0 / 3, 2.0 / 3, -1.0 / 3));
    }
    dev = std::max({dev, diag_dev(m.t12, 2.0 / 3, -2.0 / 3, -1.0 / 3), diag_dev(m.t23, 2.0 / 3, -2.0 / 3, -1.0 / 3)});
    return {dev < 1e-12, "max deviation " + sci(dev)};
}

Outcome normalization() {
    double dev = normalization_sweep(10000, 1);
    return {dev < 1e-9, "10000 states, max deviation " + sci(dev)};
}

Outcome witness() {
    double prod = product_witness_sweep(10000, 2);
    auto ent = entangled_witness_sweep(10000, 3);
    bool ok = prod < 1e-12 && ent.min_t_norm > 1.0 + 1e-6;
    return {ok, "product max | ||T||-1 | " + sci(prod) + ", entangled min ||T||-1 " + sci(ent.min_t_norm - 1.0)};
}

Outcome oracle() {
    double dev = oracle_equivalence_sweep(10000, 4);
    return {dev < 1e-12, "10000 pairs, max deviation " + sci(dev)};
}

Outcome pt_identity() {
    double dev = lemma4_sweep(100, 10, 5);
    return {dev < 1e-12, "100 unitaries x 10 operators, max deviation " + sci(dev)};
}

Outcome d_exclusion() {
    std::ostringstream detail;
    bool ok = true;
    for (int d : {3, 5, 7}) {
        std::ostringstream out, err;
        auto start = std::chrono::steady_clock::now();
        int code = run_cli({"dcheck", "--d", std::to_string(d), "--restarts", "50", "--format", "json"}, out, err);
        if (code != 0) {
            return {false, "dcheck d=" + std::to_string(d) + " exited " + std::to_string(code)};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        auto j = Json::parse(out.str());
        double t = j["max_T_norm"].get<double>();
        double res = j["residual"].get<double>();
        double want = d == 3 ? std::sqrt(3.0) : 1.0;
        bool pass = std::abs(t - want) < 1e-3 && res < 1e-6 && j["restarts"].get<int>() >= 50 && secs < 300.0;
        ok = ok && pass;
        char took[32];
        std::snprintf(took, sizeof took, " %.1fs", secs);
        detail << (d == 3 ? "" : ", ") << "d=" << d << " ||T||=" << format_number(t) << " res=" << sci(res) << took;
    }
    return {ok, detail.str()};
}

Outcome even_d() {
    double worst_dev = 0.0, worst_p = -1.0, min_witness = 10.0;
    for (int k = 0; k < 100; ++k) {
        auto rng = stream_rng(7, static_cast<std::uint64_t>(k));
        auto psi = bloch_from_state_vector(random_state_vector(4, rng));
        auto r = inversion_entanglement_contradiction(psi);
        worst_dev = std::max(worst_dev, std::abs(r.prob_first - 0.5 * (psi.y().squaredNorm() - 1.0)));
        worst_p = std::max(worst_p, r.prob_first);
        min_witness = std::min(min_witness, entanglement_witness(psi));
    }
    bool ok = worst_dev < 1e-12 && worst_p < 0.0 && min_witness > 1.0;
    return {ok, "formula deviation " + sci(worst_dev) + ", max P " + sci(worst_p)};
}

Outcome homomorphism() {
    auto h = homomorphism_sweep(100, 8);
    bool ok = h.max_homomorphism_deviation < 1e-12 && h.max_orthogonality_deviation < 1e-12 &&
              std::abs(h.min_determinant - 1.0) < 1e-12;
    return {ok, "deviation " + sci(h.max_homomorphism_deviation) + ", min det " + format_number(h.min_determinant)};
}

Outcome tables() {
    auto t = bell_correlation_tables();
    bool ok = t.standard[0] == std::array<int, 3>{1, -1, 1} && t.mirror[0] == std::array<int, 3>{1, 1, 1} &&
              t.standard[3] == std::array<int, 3>{-1, -1, -1};
    for (std::size_t b = 0; b < 4; ++b) {
        ok = ok && t.standard[b][0] * t.standard[b][1] * t.standard[b][2] == -1;
        ok = ok && t.mirror[b][0] * t.mirror[b][1] * t.mirror[b][2] == 1;
    }
    return {ok, "standard rows -1, mirror rows +1"};
}

Outcome toy_world() {
    bool square_fails = !axiom1_decomposable(ConvexStateSpace::toy_square(), Eigen::Vector2d(0.5, 0.5)).has_value();
    auto failures = disc_decomposition_failures(1000, 9);
    return {square_fails && failures == 0,
            std::string("square ") + (square_fails ? "not decomposable" : "decomposable") + ", disc failures " +
                std::to_string(failures) + "/1000"};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "mirror-W negative probability", 1.0, mirror_negative_probability},
        {2, "W and mirror-W marginals", 1.0, w_marginals},
        {3, "normalization identity", 5.0, normalization},
        {4, "product/entangled witness", 10.0, witness},
        {5, "oracle equivalence", 10.0, oracle},
        {6, "partial-transpose conjugation identity", 5.0, pt_identity},
        {7, "d-exclusion search (300s per d)", 900.0, d_exclusion},
        {8, "even-d inversion contradiction", 1.0, even_d},
        {9, "SU(2) -> SO(3) homomorphism", 1.0, homomorphism},
        {10, "Bell correlation sign tables", 1.0, tables},
        {11, "axiom-1 toy worlds", 1.0, toy_world},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs <= c.budget_s;
        bool ok = o.ok && in_time;
        failed += !ok;
        std::printf("%s  [%2d] %-40s %8.3fs / %gs  %s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s,
                    o.detail.c_str(), in_time ? "" : "  (over budget)");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
