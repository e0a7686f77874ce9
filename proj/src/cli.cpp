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

#include "gbit/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"

#include "gbit/json_io.hpp"

namespace gbit {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s = buf;
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

namespace {

struct Config {
    int d = 3;
    std::uint64_t seed = 1;
    int restarts = 50;
    std::string format = "text";
    std::string out_path;
    int threads = 0;
    std::string file_a;
    std::string file_b;
    bool inject_sign_error = false;
};

/// Thrown for bad input discovered after flag parsing (unreadable files,
/// schema violations); maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw UsageError(path + ": malformed JSON: " + e.what());
    }
}

StateFile read_state(const std::string &path) {
    Json j = read_json_file(path);
    try {
        return state_from_json(j);
    } catch (const std::exception &e) {
        throw UsageError(path + ": " + e.what());
    }
}

int cmd_prob(const Config &cfg, std::ostream &out) {
    StateFile a = read_state(cfg.file_a);
    StateFile b = read_state(cfg.file_b);
    if (a.index() != b.index()) {
        throw UsageError("state files mix a single gbit and a two-gbit state");
    }
    double p = 0.0;
    try {
        if (a.index() == 0) {
            p = measure_prob(std::get<BlochState>(a), std::get<BlochState>(b));
        } else {
            p = composite_prob(std::get<TwoGbitState>(a), std::get<TwoGbitState>(b));
        }
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
    if (cfg.format == "json") {
        out << Json{{"probability", p}}.dump(2) << '\n';
    } else {
        out << format_number(p) << '\n';
    }
    return kExitOk;
}

std::string verdict(int d, bool exist) {
    return "d=" + std::to_string(d) + ": entangled states " + (exist ? "exist" : "do not exist") + " under axioms";
}

/// Even-d demonstration state: x = y = e1/sqrt2, T = diag(1, 1, 0, ...).
/// Pure and entangled (||T|| = sqrt2) for every d >= 2.
TwoGbitState even_demo_state(int d) {
    Vec x = Vec::Unit(d, 0) / std::numbers::sqrt2;
    Mat t = Mat::Zero(d, d);
    t(0, 0) = 1.0;
    t(1, 1) = 1.0;
    return {x, x, t};
}

int cmd_dcheck(const Config &cfg, std::ostream &out) {
    if (cfg.d < 2) {
        throw UsageError("--d must be at least 2");
    }
    if (cfg.d % 2 == 0) {
        auto psi = even_demo_state(cfg.d);
        auto r = inversion_entanglement_contradiction(psi);
        // For even d, E = -1 lies in SO(d) and must be allowed, so any
        // entangled state with a negative P(psi, (E,1) psi) cannot exist.
        bool exist = false;
        if (cfg.format == "json") {
            Json j{{"d", cfg.d}, {"method", "inversion"}, {"state", to_json(psi)}, {"inversion", to_json(r)},
                   {"entangled_states_exist", exist}, {"verdict", verdict(cfg.d, exist)}};
            out << j.dump(2) << '\n';
        } else {
            out << "total inversion E = -1 on gbit A, d=" << cfg.d << '\n';
            out << "demo state ||T|| = " << format_number(psi.t().norm()) << '\n';
            out << "P(psi, (E,1) psi) = " << format_number(r.prob_first) << "  (||y||^2 - 1)/2 = "
                << format_number(r.formula_first) << '\n';
            out << "det E = " << format_number(OrthogonalMap::total_inversion(cfg.d).determinant())
                << ": E is a rotation, so it must be physical, yet it yields a negative probability\n";
            out << verdict(cfg.d, exist) << '\n';
        }
        return kExitOk;
    }
    if (cfg.restarts < 1) {
        throw UsageError("--restarts must be positive");
    }
    SearchOptions options;
    options.threads = cfg.threads;
    auto report = search_entangled_in_subspace(cfg.d, cfg.restarts, cfg.seed, options);
    bool exist = report.best_state.has_value() && report.max_t_norm > 1.0 + 1e-3;
    if (cfg.format == "json") {
        Json j = to_json(report);
        j["entangled_states_exist"] = exist;
        j["verdict"] = verdict(cfg.d, exist);
        out << j.dump(2) << '\n';
    } else {
        out << "restarts " << report.restarts << ", feasible " << report.feasible_restarts << ", seed "
            << report.seed << (report.triples_sampled ? ", triple flips sampled" : "") << '\n';
        out << "max ||T|| = " << format_number(report.max_t_norm) << '\n';
        out << "constraint residual = " << format_number(report.residual) << '\n';
        out << verdict(cfg.d, exist) << '\n';
    }
    return kExitOk;
}

std::string format_vector(const Vec &v) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + format_number(v(i));
    }
    return s + ")";
}

void render_marginals(std::ostream &out, const std::string &name, const ThreeGbitMarginals &m) {
    out << name << '\n';
    out << "  x = " << format_vector(m.x) << "  y = " << format_vector(m.y) << "  z = " << format_vector(m.z) << '\n';
    out << "  T12 = diag" << format_vector(m.t12.diagonal()) << '\n';
    out << "  T13 = diag" << format_vector(m.t13.diagonal()) << '\n';
    out << "  T23 = diag" << format_vector(m.t23.diagonal()) << '\n';
}

int cmd_mirror_report(const Config &cfg, std::ostream &out, std::ostream &err) {
    auto report = build_mirror_report();
    if (cfg.inject_sign_error) {
        // Negative control: one flipped correlation must be caught.
        report.mirror_w.t13(1, 1) = -report.mirror_w.t13(1, 1);
    }
    auto deviations = mirror_report_deviations(report);
    if (cfg.format == "json") {
        Json j = to_json(report);
        j["deviations"] = deviations;
        j["passed"] = deviations.empty();
        out << j.dump(2) << '\n';
    } else {
        out << render_tables(report.tables) << '\n';
        render_marginals(out, "W state", report.w);
        render_marginals(out, "mirror W state", report.mirror_w);
        out << "P(psi, mirror W psi13) = " << format_number(report.overlap) << '\n';
        out << "min P(Bell, W psi13) = " << format_number(report.standard_min_overlap) << '\n';
    }
    for (const auto &d : deviations) {
        err << "deviation: " << d << '\n';
    }
    return deviations.empty() ? kExitOk : kExitVerificationFailure;
}

int cmd_verify_all(const Config &cfg, std::ostream &out) {
    auto checks = run_all_checks(cfg.seed);
    bool all = true;
    for (const auto &c : checks) {
        all = all && c.passed;
    }
    if (cfg.format == "json") {
        Json list = Json::array();
        for (const auto &c : checks) {
            list.push_back(to_json(c));
        }
        out << Json{{"seed", cfg.seed}, {"checks", list}, {"passed", all}}.dump(2) << '\n';
    } else {
        for (const auto &c : checks) {
            const char *tag = !c.passed ? "FAIL" : (c.expected_fail ? "EXPECTED-FAIL" : "PASS");
            out << tag << "  " << c.name << "  [" << c.detail << "]\n";
        }
        out << (all ? "all checks passed" : "some checks failed") << '\n';
    }
    return all ? kExitOk : kExitVerificationFailure;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Config cfg;
    CLI::App app{"Generalized-bit toolkit: probabilities, dimension checks and mirror-QM reports", "gbit"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", cfg.out_path, "Write output to this file");
    };

    auto *prob = app.add_subcommand("prob", "Probability of state A passing the test for state B");
    prob->add_option("a", cfg.file_a, "Prepared state file")->required();
    prob->add_option("b", cfg.file_b, "Measured state file")->required();
    add_common(prob);

    auto *dcheck = app.add_subcommand("dcheck", "Decide whether entangled states exist for gbit dimension d");
    dcheck->add_option("--d", cfg.d, "Gbit dimension")->capture_default_str();
    dcheck->add_option("--restarts", cfg.restarts, "Search restarts for odd d")->capture_default_str();
    dcheck->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    dcheck->add_option("--threads", cfg.threads, "Worker threads (0: all)")->check(CLI::NonNegativeNumber);
    add_common(dcheck);

    auto *mirror = app.add_subcommand("mirror-report", "Mirror quantum mechanics inconsistency report");
    mirror->add_flag("--inject-sign-error", cfg.inject_sign_error)->group("");
    add_common(mirror);

    auto *verify = app.add_subcommand("verify-all", "Run every property verifier");
    verify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    verify->add_option("--threads", cfg.threads, "Worker threads (0: all)")->check(CLI::NonNegativeNumber);
    add_common(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "gbit: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (cfg.threads > 0) {
            omp_set_num_threads(cfg.threads);
        }
        if (prob->parsed()) {
            code = cmd_prob(cfg, buffer);
        } else if (dcheck->parsed()) {
            code = cmd_dcheck(cfg, buffer);
        } else if (mirror->parsed()) {
            code = cmd_mirror_report(cfg, buffer, err);
        } else {
            code = cmd_verify_all(cfg, buffer);
        }
    } catch (const UsageError &e) {
        err << "gbit: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "gbit: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "gbit: verification error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }

    if (cfg.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!(file << buffer.str())) {
            err << "gbit: cannot write " << cfg.out_path << '\n';
            return kExitUsage;
        }
    }
    return code;
}

} // namespace gbit
