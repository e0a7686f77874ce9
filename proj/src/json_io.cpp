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

#include "gbit/json_io.hpp"

#include <stdexcept>

namespace gbit {

namespace {

Json vec_json(const Vec &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

template <class M>
Json mat_json(const M &m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        out.push_back(std::move(row));
    }
    return out;
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

double number(const Json &j, const char *what) {
    if (!j.is_number()) {
        throw std::invalid_argument(std::string(what) + ": expected a number");
    }
    return j.get<double>();
}

Vec parse_vec(const Json &j, const char *what, int d) {
    if (!j.is_array() || static_cast<int>(j.size()) != d) {
        throw std::invalid_argument(std::string(what) + ": expected an array of length " + std::to_string(d));
    }
    Vec v(d);
    for (int i = 0; i < d; ++i) {
        v(i) = number(j[static_cast<std::size_t>(i)], what);
    }
    return v;
}

Mat parse_mat(const Json &j, const char *what, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rows) + " rows");
    }
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        m.row(i) = parse_vec(j[static_cast<std::size_t>(i)], what, cols).transpose();
    }
    return m;
}

int parse_d(const Json &j) {
    const Json &d = field(j, "d");
    if (!d.is_number_integer() || d.get<int>() < 1) {
        throw std::invalid_argument("\"d\" must be a positive integer");
    }
    return d.get<int>();
}

} // namespace

Json to_json(const BlochState &state) { return Json{{"d", state.d()}, {"x", vec_json(state.vec())}}; }

Json to_json(const TwoGbitState &state) {
    return Json{{"d", state.d()}, {"x", vec_json(state.x())}, {"y", vec_json(state.y())}, {"T", mat_json(state.t())}};
}

Json to_json(const SchmidtForm &form) {
    return Json{{"R1", mat_json(form.r1.matrix())}, {"R2", mat_json(form.r2.matrix())}, {"t", vec_json(form.t)}};
}

Json to_json(const CMat &m) { return Json{{"re", mat_json(m.real())}, {"im", mat_json(m.imag())}}; }

Json to_json(const SearchReport &report) {
    Json out{{"d", report.d},
             {"max_T_norm", report.max_t_norm},
             {"residual", report.residual},
             {"best_state", report.best_state ? to_json(*report.best_state) : Json(nullptr)},
             {"restarts", report.restarts},
             {"seed", report.seed}};
    out["feasible_restarts"] = report.feasible_restarts;
    out["best_restart"] = report.best_restart;
    out["triples_sampled"] = report.triples_sampled;
    return out;
}

Json to_json(const InversionReport &report) {
    return Json{{"prob_first", report.prob_first},       {"prob_second", report.prob_second},
                {"formula_first", report.formula_first}, {"formula_second", report.formula_second},
                {"entangled", report.entangled},         {"contradiction", report.contradiction}};
}

Json to_json(const ThreeGbitMarginals &m) {
    return Json{{"x", vec_json(m.x)},     {"y", vec_json(m.y)},     {"z", vec_json(m.z)},
                {"T12", mat_json(m.t12)}, {"T13", mat_json(m.t13)}, {"T23", mat_json(m.t23)}};
}

Json to_json(const CorrelationTables &tables) {
    Json standard = Json::array();
    Json mirror = Json::array();
    for (std::size_t b = 0; b < tables.labels.size(); ++b) {
        standard.push_back(Json{{"state", tables.labels[b]}, {"signs", tables.standard[b]}});
        mirror.push_back(Json{{"state", tables.labels[b]}, {"signs", tables.mirror[b]}});
    }
    return Json{{"standard", standard}, {"mirror", mirror}};
}

Json to_json(const MirrorReport &report) {
    return Json{{"tables", to_json(report.tables)},
                {"w", to_json(report.w)},
                {"mirror_w", to_json(report.mirror_w)},
                {"overlap", report.overlap},
                {"standard_min_overlap", report.standard_min_overlap}};
}

Json to_json(const CheckResult &check) {
    return Json{{"name", check.name}, {"passed", check.passed}, {"expected_fail", check.expected_fail},
                {"detail", check.detail}};
}

BlochState bloch_state_from_json(const Json &j) {
    int d = parse_d(j);
    return BlochState(parse_vec(field(j, "x"), "x", d));
}

TwoGbitState two_gbit_state_from_json(const Json &j) {
    int d = parse_d(j);
    return TwoGbitState(parse_vec(field(j, "x"), "x", d), parse_vec(field(j, "y"), "y", d),
                        parse_mat(field(j, "T"), "T", d, d));
}

CMat complex_matrix_from_json(const Json &j) {
    const Json &re = field(j, "re");
    if (!re.is_array() || re.empty() || !re[0].is_array()) {
        throw std::invalid_argument("re: expected a non-empty matrix");
    }
    int rows = static_cast<int>(re.size());
    int cols = static_cast<int>(re[0].size());
    CMat out(rows, cols);
    out.real() = parse_mat(re, "re", rows, cols);
    out.imag() = parse_mat(field(j, "im"), "im", rows, cols);
    return out;
}

StateFile state_from_json(const Json &j) {
    if (j.is_object() && j.contains("T")) {
        return two_gbit_state_from_json(j);
    }
    return bloch_state_from_json(j);
}

} // namespace gbit
