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

// Serial reference vs OpenMP kernels on the two parallel workloads: the
// multi-start search and the verification sweeps. Also checks that both
// paths return the same numbers.
//
// usage: gbit_bench [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "gbit/verification.hpp"

using namespace gbit;

namespace {

template <class F>
double seconds(F &&f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char *name, double serial, double parallel, bool same) {
    std::printf("%-28s %10.3f %10.3f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
                same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char **argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
    omp_set_num_threads(threads);
    std::printf("threads: %d\n", threads);
    std::printf("%-28s %10s %10s %9s\n", "workload", "serial s", "omp s", "speedup");

    for (int d : {3, 5, 7}) {
        SearchOptions opt;
        opt.threads = threads;
        SearchReport s, p;
        double ts = seconds([&] { s = search_entangled_in_subspace_serial(d, 16, 1, opt); });
        double tp = seconds([&] { p = search_entangled_in_subspace(d, 16, 1, opt); });
        char name[64];
        std::snprintf(name, sizeof name, "search d=%d, 16 restarts", d);
        row(name, ts, tp, s.max_t_norm == p.max_t_norm && s.best_restart == p.best_restart);
    }

    const std::int64_t n = 100000;
    double a = 0, b = 0;
    double ts = seconds([&] { a = normalization_sweep(n, 1, Exec::serial); });
    double tp = seconds([&] { b = normalization_sweep(n, 1, Exec::parallel); });
    row("normalization sweep 1e5", ts, tp, a == b);

    ts = seconds([&] { a = oracle_equivalence_sweep(n, 2, Exec::serial); });
    tp = seconds([&] { b = oracle_equivalence_sweep(n, 2, Exec::parallel); });
    row("oracle sweep 1e5", ts, tp, a == b);

    EntangledSweep es, ep;
    ts = seconds([&] { es = entangled_witness_sweep(n, 3, Exec::serial); });
    tp = seconds([&] { ep = entangled_witness_sweep(n, 3, Exec::parallel); });
    row("entangled witness sweep 1e5", ts, tp, es.min_t_norm == ep.min_t_norm);

    ts = seconds([&] { a = lemma4_sweep(2000, 10, 4, Exec::serial); });
    tp = seconds([&] { b = lemma4_sweep(2000, 10, 4, Exec::parallel); });
    row("PT identity sweep 2e3 x 10", ts, tp, a == b);
    return 0;
}
