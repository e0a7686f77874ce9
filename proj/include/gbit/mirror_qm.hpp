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

#ifndef GBIT_MIRROR_QM_HPP
#define GBIT_MIRROR_QM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gbit/quantum_bridge.hpp"

namespace gbit {

/// One- and two-body (and the three-body) Pauli expectations of a
/// three-qubit operator.
struct ThreeGbitMarginals {
    Vec x, y, z;
    Mat t12, t13, t23;
    /// T123[i][j][k] = Tr(s_i x s_j x s_k rho). Not used by the
    /// inconsistency argument.
    std::array<double, 27> t123{};

    double t123_at(int i, int j, int k) const { return t123[static_cast<std::size_t>(9 * i + 3 * j + k)]; }

    /// Reduced two-body state of subsystems (a, b), 1-based with a < b.
    TwoGbitState pair(int a, int b) const;
};

ThreeGbitMarginals marginals_from_density(const DensityMatrix &rho);

/// Partial transposition of subsystem 1 in Bloch form: negates x_2 and row
/// 2 of T. Throws std::invalid_argument unless d = 3.
TwoGbitState mirror_map(const TwoGbitState &psi);

/// psi_QM = (0, 0, diag[1, -1, 1]) and psi_MQM = (0, 0, diag[1, 1, 1]).
TwoGbitState psi_qm();
TwoGbitState psi_mqm();
/// (0, 0, diag[-1, -1, -1]).
TwoGbitState singlet_state();

struct WStateConstruction {
    UnitaryMap u12;   // completion of |00> -> |00>, |01> -> (|01>+|10>)/sqrt2
    UnitaryMap u23;   // completion of |00> -> |01>/sqrt3 + sqrt(2/3)|10>
    CVec vector;      // (U12 x 1)(1 x U23)|000>
    ThreeGbitMarginals marginals;
};

/// Completes the prescribed columns of a two-qubit gate to a unitary by
/// Gram-Schmidt over the computational basis in index order.
UnitaryMap complete_unitary(const std::vector<std::pair<int, CVec>> &columns);

WStateConstruction build_w_state();
/// Marginals of PT_2 |W><W|.
ThreeGbitMarginals mirror_w_marginals();

/// The local rotations mapping psi_MQM onto (0, 0, diag[-1, -1, 1]).
std::pair<OrthogonalMap, OrthogonalMap> mirror_local_equivalence();
/// P((0, 0, diag[-1, -1, 1]), psi13 of the mirror W state); equals -1/6.
double mirror_w_inconsistency();
/// Same overlap with psi13 of the ordinary W state, minimized over the
/// Bell-type effects. Non-negative.
double standard_w_min_overlap();

/// The four Bell states of standard quantum theory in Bloch form:
/// phi+, phi-, psi+, psi-.
std::array<TwoGbitState, 4> bell_states();
std::array<std::string, 4> bell_labels();

struct CorrelationTables {
    std::array<std::string, 4> labels;
    /// sign(T_kk) for k = x, y, z.
    std::array<std::array<int, 3>, 4> standard;
    std::array<std::array<int, 3>, 4> mirror;
};

CorrelationTables bell_correlation_tables();
/// Side-by-side text rendering of both sign tables.
std::string render_tables(const CorrelationTables &tables);

/// Transformation of the mirror theory: rho -> PT1(U PT1(rho) U^dagger).
class MirrorTransform {
  public:
    explicit MirrorTransform(UnitaryMap u) : u_(std::move(u)) {}

    const UnitaryMap &unitary() const { return u_; }
    CMat apply(const CMat &rho) const { return conjugate_by_pt1(u_, rho); }
    DensityMatrix apply(const DensityMatrix &rho) const;
    /// The same map written as PT2 U* PT2.
    CMat apply_via_pt2(const CMat &rho) const { return conjugate_by_pt2_of_conjugate(u_, rho); }
    /// (this o other)(rho) = this(other(rho)); stays in the conjugate group.
    MirrorTransform compose(const MirrorTransform &other) const { return MirrorTransform(u_ * other.u_); }

  private:
    UnitaryMap u_;
};

MirrorTransform mirror_group_conjugation(const UnitaryMap &u);

/// Everything the mirror pipeline produces, in one place.
struct MirrorReport {
    CorrelationTables tables;
    ThreeGbitMarginals w;
    ThreeGbitMarginals mirror_w;
    double overlap;               // P(psi, mirror-W psi13)
    double standard_min_overlap;  // min over Bell effects of P(., W psi13)
};

MirrorReport build_mirror_report();

/// Human-readable list of every value that misses its expected value by
/// more than `tol`. Empty when the report is correct.
std::vector<std::string> mirror_report_deviations(const MirrorReport &report, double tol = 1e-12);

} // namespace gbit

#endif
