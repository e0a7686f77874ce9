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

#ifndef GBIT_JSON_IO_HPP
#define GBIT_JSON_IO_HPP

#include <string>
#include <variant>

#include "json.hpp"

#include "gbit/axiom_verifier.hpp"
#include "gbit/mirror_qm.hpp"
#include "gbit/verification.hpp"

namespace gbit {

using Json = nlohmann::ordered_json;

/// {"d": n, "x": [...]}
Json to_json(const BlochState &state);
/// {"d": n, "x": [...], "y": [...], "T": [[...], ...]}, T row-major.
Json to_json(const TwoGbitState &state);
/// {"R1": [[...]], "R2": [[...]], "t": [...]}
Json to_json(const SchmidtForm &form);
/// {"re": [[...]], "im": [[...]]}
Json to_json(const CMat &m);
/// {"d", "max_T_norm", "residual", "best_state", "restarts", "seed", ...}
Json to_json(const SearchReport &report);
Json to_json(const InversionReport &report);
Json to_json(const ThreeGbitMarginals &m);
Json to_json(const CorrelationTables &tables);
Json to_json(const MirrorReport &report);
Json to_json(const CheckResult &check);

/// Parsers throw std::invalid_argument with a readable message on any
/// schema violation (missing key, wrong shape, d mismatch) and propagate
/// std::domain_error from state validation.
BlochState bloch_state_from_json(const Json &j);
TwoGbitState two_gbit_state_from_json(const Json &j);
CMat complex_matrix_from_json(const Json &j);

/// A parsed state file: a single gbit or a two-gbit state, told apart by
/// the presence of "T".
using StateFile = std::variant<BlochState, TwoGbitState>;
StateFile state_from_json(const Json &j);

} // namespace gbit

#endif
