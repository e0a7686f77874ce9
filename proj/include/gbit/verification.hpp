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

#ifndef GBIT_VERIFICATION_HPP
#define GBIT_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gbit/axiom_verifier.hpp"
#include "gbit/mirror_qm.hpp"

namespace gbit {

/// Batch sample sweeps. Sample k draws from stream_rng(seed, k), so the
/// parallel kernels return exactly what the serial references return.
enum class Exec { serial, parallel };

/// max | ||x||^2 + ||y||^2 + ||T||^2 - 3 | over random pure two-qubit vectors.
double normalization_sweep(std::int64_t samples, std::uint64_t seed, Exec exec = Exec::parallel);

/// max | ||T|| - 1 | over random pure product states (d = 3).
double product_witness_sweep(std::int64_t samples, std::uint64_t seed, Exec exec = Exec::parallel);

/// Random Schmidt-circle points, angle resampled while |sin a| < 0.01 so the
/// state stays away from the two product endpoints, then random local
/// rotations.
TwoGbitState random_entangled_state(Rng &rng);

struct EntangledSweep {
    double min_t_norm;          // smallest ||T|| seen
    double min_factor_gap;      // smallest ||T - x y^T||_F
    double max_norm_deviation;  // largest | ||z||^2 - 3 |
};
EntangledSweep entangled_witness_sweep(std::int64_t samples, std::uint64_t seed, Exec exec = Exec::parallel);

/// max | P12(bloch(phi), bloch(psi)) - |<phi|psi>|^2 | over random pure pairs.
double oracle_equivalence_sweep(std::int64_t samples, std::uint64_t seed, Exec exec = Exec::parallel);

/// Max deviation of PT1 U PT1 vs PT2 U* PT2 over Haar-random U, each checked
/// on `operators` random product and generic operators.
double lemma4_sweep(std::int64_t unitaries, int operators, std::uint64_t seed, Exec exec = Exec::parallel);

struct HomomorphismSweep {
    double max_homomorphism_deviation;  // |R(U1 U2) - R(U1) R(U2)|
    double max_orthogonality_deviation; // |R^T R - 1|
    double min_determinant;
};
HomomorphismSweep homomorphism_sweep(std::int64_t pairs, std::uint64_t seed, Exec exec = Exec::parallel);

struct InversionSweep {
    double max_formula_deviation;  // |P(psi,(E,1)psi) - (||y||^2 - 1)/2|
    double max_probability;        // largest P(psi,(E,1)psi); negative means all contradict
};
/// Random entangled pure states from random two-qubit vectors.
InversionSweep inversion_sweep(std::int64_t samples, std::uint64_t seed, Exec exec = Exec::parallel);

/// Number of sampled interior disc states that fail the decomposition.
std::int64_t disc_decomposition_failures(std::int64_t samples, std::uint64_t seed, Exec exec = Exec::parallel);

struct CheckResult {
    std::string name;
    bool passed;
    /// Passed because the expected negative finding was observed.
    bool expected_fail;
    std::string detail;
};

/// Every property verifier at its pinned tolerance. `samples`
/// scales the random sweeps.
std::vector<CheckResult> run_all_checks(std::uint64_t seed, std::int64_t samples = 10000);

} // namespace gbit

#endif
