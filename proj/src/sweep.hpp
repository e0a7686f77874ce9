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

#ifndef GBIT_SRC_SWEEP_HPP
#define GBIT_SRC_SWEEP_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "gbit/numeric.hpp"
#include "gbit/verification.hpp"

namespace gbit::detail {

// Reduces f(rng_k) over k in [0, n) with `combine` (max or min). Both
// reductions are order independent, so serial and parallel agree exactly.
// A throwing or NaN sample poisons the result with `poison`.
template <class Combine, class F>
double sweep_reduce(std::int64_t n, std::uint64_t seed, Exec exec, double init, double poison, Combine combine,
                    F f) {
    double acc = init;
    bool failed = false;
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            double local = init;
            bool local_failed = false;
#pragma omp for schedule(static)
            for (std::int64_t k = 0; k < n; ++k) {
                try {
                    auto rng = stream_rng(seed, static_cast<std::uint64_t>(k));
                    double v = f(rng);
                    local_failed = local_failed || std::isnan(v);
                    local = combine(local, v);
                } catch (...) {
                    local_failed = true;
                }
            }
#pragma omp critical
            {
                acc = combine(acc, local);
                failed = failed || local_failed;
            }
        }
    } else {
        for (std::int64_t k = 0; k < n; ++k) {
            try {
                auto rng = stream_rng(seed, static_cast<std::uint64_t>(k));
                double v = f(rng);
                failed = failed || std::isnan(v);
                acc = combine(acc, v);
            } catch (...) {
                failed = true;
            }
        }
    }
    return failed ? poison : acc;
}

template <class F>
double sweep_max(std::int64_t n, std::uint64_t seed, Exec exec, F f) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return sweep_reduce(n, seed, exec, -inf, inf, [](double a, double b) { return std::max(a, b); }, f);
}

template <class F>
double sweep_min(std::int64_t n, std::uint64_t seed, Exec exec, F f) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return sweep_reduce(n, seed, exec, inf, -inf, [](double a, double b) { return std::min(a, b); }, f);
}

} // namespace gbit::detail

#endif
