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

#include <gtest/gtest.h>

using namespace gbit;

TEST(JsonIo, bloch_state_round_trip) {
    BlochState s(Eigen::Vector3d(0.1, -0.2, 0.3));
    Json j = to_json(s);
    EXPECT_EQ(j.dump(), R"({"d":3,"x":[0.1,-0.2,0.3]})");
    EXPECT_EQ(bloch_state_from_json(j).vec(), s.vec());
}

TEST(JsonIo, two_gbit_state_is_row_major_and_lossless) {
    auto rng = stream_rng(1, 0);
    Mat t = random_rotation(3, rng);
    TwoGbitState s(random_unit_vector(3, rng) * 0.3, Vec::Zero(3), t);
    Json j = to_json(s);
    EXPECT_EQ(j["T"][0][1].get<double>(), t(0, 1));
    auto back = two_gbit_state_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.x(), s.x());
    EXPECT_EQ(back.t(), s.t());
}

TEST(JsonIo, schmidt_form_and_complex_matrix) {
    TwoGbitState s(Vec::Zero(3), Vec::Zero(3), Eigen::Vector3d(1, -1, 1).asDiagonal().toDenseMatrix());
    Json j = to_json(schmidt_decompose(s));
    EXPECT_TRUE(j.contains("R1"));
    EXPECT_TRUE(j.contains("R2"));
    EXPECT_EQ(j["t"].size(), 3u);

    auto rng = stream_rng(2, 0);
    CMat m = random_complex_matrix(2, 3, rng);
    Json c = to_json(m);
    EXPECT_EQ(c["re"].size(), 2u);
    EXPECT_EQ(c["im"][1].size(), 3u);
    EXPECT_EQ(complex_matrix_from_json(c), m);
}

TEST(JsonIo, search_report_schema) {
    SearchReport r;
    r.d = 3;
    r.restarts = 2;
    r.seed = 7;
    r.max_t_norm = 1.5;
    r.best_state = TwoGbitState::zero(3);
    Json j = to_json(r);
    for (const char *key : {"d", "max_T_norm", "residual", "best_state", "restarts", "seed"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["best_state"]["d"], 3);
    r.best_state.reset();
    EXPECT_TRUE(to_json(r)["best_state"].is_null());
}

TEST(JsonIo, mirror_report_schema) {
    Json j = to_json(build_mirror_report());
    EXPECT_EQ(j["tables"]["standard"].size(), 4u);
    EXPECT_EQ(j["tables"]["mirror"][0]["signs"], Json::array({1, 1, 1}));
    EXPECT_EQ(j["mirror_w"]["T12"][1][1].get<double>() < 0, true);
    EXPECT_NEAR(j["overlap"].get<double>(), -1.0 / 6.0, 1e-12);
}

TEST(JsonIo, state_file_kind) {
    auto one = state_from_json(Json::parse(R"({"d":2,"x":[1,0]})"));
    EXPECT_EQ(one.index(), 0u);
    auto two = state_from_json(Json::parse(R"({"d":1,"x":[0],"y":[0],"T":[[1]]})"));
    EXPECT_EQ(two.index(), 1u);
}

TEST(JsonIo, schema_errors) {
    EXPECT_THROW(bloch_state_from_json(Json::parse(R"({"x":[1,0]})")), std::invalid_argument);
    EXPECT_THROW(bloch_state_from_json(Json::parse(R"({"d":3,"x":[1,0]})")), std::invalid_argument);
    EXPECT_THROW(bloch_state_from_json(Json::parse(R"({"d":2,"x":[1,"a"]})")), std::invalid_argument);
    EXPECT_THROW(bloch_state_from_json(Json::parse(R"({"d":0,"x":[]})")), std::invalid_argument);
    EXPECT_THROW(bloch_state_from_json(Json::parse(R"({"d":2,"x":[1,1]})")), std::domain_error);
    EXPECT_THROW(two_gbit_state_from_json(Json::parse(R"({"d":2,"x":[0,0],"y":[0,0],"T":[[1,0]]})")),
                 std::invalid_argument);
    EXPECT_THROW(complex_matrix_from_json(Json::parse(R"({"re":[[1]],"im":[[1,2]]})")), std::invalid_argument);
    EXPECT_THROW(state_from_json(Json::parse("[1,2]")), std::invalid_argument);
}
