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

#ifndef GBIT_AXIOM_VERIFIER_HPP
#define GBIT_AXIOM_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gbit/composite.hpp"

namespace gbit {

/// Local transformation flipping the sign of coordinate 0 together with one
/// (single) or three (triple) further coordinates. Indices are 0-based.
class FlipGenerator {
  public:
    static FlipGenerator single(int d, int i);
    static FlipGenerator triple(int d, int j, int k, int l);

    int d() const { return d_; }
    bool is_triple() const { return axes_.size() == 3; }
    /// Flipped coordinates other than 0.
    const std::vector<int> &axes() const { return axes_; }
    /// Diagonal of the flip matrix (+1 / -1 entries).
    Vec signs() const;
    OrthogonalMap matrix() const;

  private:
    FlipGenerator(int d, std::vector<int> axes) : d_(d), axes_(std::move(axes)) {}

    int d_;
    std::vector<int> axes_;
};

struct FlipSet {
    std::vector<FlipGenerator> singles;
    std::vector<FlipGenerator> triples;
    /// True when the triples are a random subset rather than all of them.
    bool triples_sampled = false;
};

/// All singles; all triples for d <= 7, otherwise `triple_cap` distinct
/// triples drawn with `seed`.
FlipSet enumerate_flips(int d, int triple_cap = 64, std::uint64_t seed = 0);

struct InversionReport {
    double prob_first;       // P(psi, (E,1) psi), direct evaluation
    double prob_second;      // P(psi, (1,E) psi)
    double formula_first;    // (||y||^2 - 1) / 2
    double formula_second;   // (||x||^2 - 1) / 2
    bool entangled;          // ||T|| > 1
    /// A negative probability appeared, so E cannot be physical while
    /// this state exists.
    bool contradiction;
};

/// Throws std::invalid_argument for non-pure input.
InversionReport inversion_entanglement_contradiction(const TwoGbitState &psi);

/// For every single flip, then every triple, the x-side and y-side
/// residuals (sum of squared flipped components and rows/columns of T) - 2.
/// Layout: [single x, single y]..., [triple x, triple y]...
/// Throws std::invalid_argument for d < 3.
Vec flip_constraints(const TwoGbitState &psi);
Vec flip_constraints(const TwoGbitState &psi, const FlipSet &flips);

/// Equality-constrained feasibility problem over flattened z = (x, y, T):
/// maximize ||T||^2 - 1 subject to
///   S12 membership     P(z,psi1)+P(z,psi2)-1 = 0, P(z,psi3) = 0, P(z,psi4) = 0
///   purity             ||z||^2 - 3 = 0
///   flip images        P(z,(R,1)z) = 0 and P(z,(1,R)z) = 0 for every flip R
/// and the local-positivity inequalities P(z,(Q,1)z) >= 0, P(z,(1,Q)z) >= 0
/// for the half-turns Q = 2nn^T - 1 about the axes e_i and (e_i +- e_j)/sqrt2
/// (d odd makes every such Q a rotation). Without the inequalities the d = 3
/// optimum is only pinned down up to non-orthogonal T with the same norm.
class FeasibilityProblem {
  public:
    explicit FeasibilityProblem(int d, int triple_cap = 64, std::uint64_t seed = 0,
                                bool local_positivity = true);

    int d() const { return d_; }
    int num_variables() const { return 2 * d_ + d_ * d_; }
    int num_equalities() const;
    int num_inequalities() const { return 2 * static_cast<int>(axes_.size()); }
    const FlipSet &flips() const { return flips_; }

    /// ||T||^2 - 1.
    double objective(const Vec &z) const;
    Vec equalities(const Vec &z) const;
    Vec inequalities(const Vec &z) const;
    /// Rows are constraint gradients.
    Mat equality_jacobian(const Vec &z) const;
    Mat inequality_jacobian(const Vec &z) const;

    /// -(objective) + mu (sum c^2 + sum min(g,0)^2) and its gradient.
    double penalty(const Vec &z, double mu, Vec *grad) const;

    /// max(|c|, max(-g, 0)).
    double residual(const Vec &z) const;

  private:
    int d_;
    FlipSet flips_;
    SubspaceBasis basis_;
    std::vector<Vec> axes_;
};

struct SearchOptions {
    int rounds = 20;               // penalty doublings
    double initial_penalty = 10.0;
    int iterations_per_round = 400;
    int threads = 0;               // 0: OpenMP default
    int triple_cap = 64;
    bool local_positivity = true;
};

struct RestartResult {
    Vec z;
    double objective;
    double residual;
    bool feasible;
};

struct SearchReport {
    int d = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
    int feasible_restarts = 0;
    int best_restart = -1;
    double max_t_norm = 0.0;
    double residual = 0.0;
    bool triples_sampled = false;
    std::optional<TwoGbitState> best_state;
};

/// One restart of the penalized search: gradient descent with backtracking
/// under a doubling penalty, then Gauss-Newton projection onto the
/// constraint set.
RestartResult run_restart(const FeasibilityProblem &problem, std::uint64_t seed, int restart,
                          const SearchOptions &options);

/// Multi-start search for the most entangled state compatible with the
/// flip constraints. Restarts run in parallel; the result is identical to
/// the serial reference. Throws std::invalid_argument unless d >= 3 is odd
/// and restarts >= 1.
SearchReport search_entangled_in_subspace(int d, int restarts, std::uint64_t seed,
                                          const SearchOptions &options = {});
SearchReport search_entangled_in_subspace_serial(int d, int restarts, std::uint64_t seed,
                                                 const SearchOptions &options = {});

struct PhysicalityReport {
    double min_probability;
    std::optional<std::size_t> violating_index;  // set when min < -kValidityTol
};

PhysicalityReport check_physicality(const TwoGbitState &psi, const std::vector<TwoGbitState> &effects);

/// The four subspace basis states, the four Bell-type states and
/// `product_grid` seeded random pure product effects. d = 3.
std::vector<TwoGbitState> default_effect_family(std::int64_t product_grid, std::uint64_t seed);

} // namespace gbit

#endif
