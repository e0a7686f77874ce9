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

#include "gbit/gbit_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

using namespace gbit;

namespace {

Vec v3(double a, double b, double c) { return Eigen::Vector3d(a, b, c); }

void expect_near(const Vec &a, const Vec &b, double tol) {
    ASSERT_EQ(a.size(), b.size());
    EXPECT_LE((a - b).cwiseAbs().maxCoeff(), tol) << a.transpose() << " vs " << b.transpose();
}

} // namespace

TEST(BlochState, rejects_norm_above_one) {
    EXPECT_THROW(BlochState(v3(1.0, 0.1, 0.0)), std::domain_error);
    EXPECT_NO_THROW(BlochState(v3(1.0 + 1e-12, 0.0, 0.0)));
}

TEST(BlochState, totally_mixed_and_orthogonal) {
    auto m = BlochState::totally_mixed(3);
    EXPECT_EQ(m.vec(), Vec::Zero(3));
    EXPECT_FALSE(m.is_pure());
    auto e1 = BlochState::basis(3, 0);
    EXPECT_TRUE(e1.is_pure());
    expect_near(e1.orthogonal().vec(), v3(-1, 0, 0), 0.0);
}

TEST(BlochFromProbs, examples) {
    std::vector<double> p1{1.0, 0.5, 0.5};
    expect_near(bloch_from_probs(p1).vec(), v3(1, 0, 0), 0.0);
    std::vector<double> p2{0.5, 0.5, 0.5};
    expect_near(bloch_from_probs(p2).vec(), v3(0, 0, 0), 0.0);
    std::vector<double> p3{0.75, 0.25, 0.5};
    expect_near(bloch_from_probs(p3).vec(), v3(0.5, -0.5, 0), 0.0);
}

TEST(BlochFromProbs, rejects_out_of_range) {
    std::vector<double> bad{1.1, 0.5, 0.5};
    EXPECT_THROW(bloch_from_probs(bad), std::domain_error);
    std::vector<double> neg{0.5, -0.01, 0.5};
    EXPECT_THROW(bloch_from_probs(neg), std::domain_error);
}

TEST(BlochFromProbs, round_trip) {
    std::vector<double> exact{0.75, 0.5, 0.25, 0.5, 0.375};
    EXPECT_EQ(probs_from_bloch(bloch_from_probs(exact)), exact);
    auto rng = stream_rng(3, 0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 100; ++k) {
        std::vector<double> p(3);
        for (auto &q : p) {
            q = u(rng) * 0.5 + 0.25;  // stays inside the unit ball
        }
        auto back = probs_from_bloch(bloch_from_probs(p));
        for (int i = 0; i < 3; ++i) {
            EXPECT_NEAR(back[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i)], 1e-15);
        }
    }
}

TEST(MeasureProb, examples) {
    auto e1 = BlochState::basis(3, 0);
    auto e2 = BlochState::basis(3, 1);
    EXPECT_DOUBLE_EQ(measure_prob(e1, e1), 1.0);
    EXPECT_DOUBLE_EQ(measure_prob(e1, e1.orthogonal()), 0.0);
    EXPECT_DOUBLE_EQ(measure_prob(e1, e2), 0.5);
}

TEST(MeasureProb, errors) {
    EXPECT_THROW(measure_prob(BlochState::basis(3, 0), BlochState::basis(4, 0)), std::invalid_argument);
    EXPECT_THROW(measure_prob(BlochState::basis(3, 0), BlochState(v3(0.5, 0, 0))), std::invalid_argument);
}

TEST(MeasureProb, rotation_invariant_and_bounded) {
    for (int k = 0; k < 100; ++k) {
        auto rng = stream_rng(11, static_cast<std::uint64_t>(k));
        std::uniform_real_distribution<double> u(0.0, 1.0);
        BlochState a(random_unit_vector(5, rng) * u(rng));
        BlochState m(random_unit_vector(5, rng));
        OrthogonalMap r(random_rotation(5, rng));
        double p = measure_prob(a, m);
        EXPECT_NEAR(measure_prob(apply_map(r, a), apply_map(r, m)), p, 1e-12);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
    }
}

TEST(Mix, examples) {
    auto e1 = BlochState::basis(3, 0);
    auto e2 = BlochState::basis(3, 1);
    std::vector<BlochState> pair{e1, e1.orthogonal()};
    std::vector<double> half{0.5, 0.5};
    expect_near(mix(pair, half).vec(), Vec::Zero(3), 0.0);

    BlochState x(v3(0.2, -0.3, 0.1));
    std::vector<BlochState> one{x};
    std::vector<double> w1{1.0};
    expect_near(mix(one, w1).vec(), x.vec(), 0.0);

    std::vector<BlochState> two{e1, e2};
    std::vector<double> w{0.75, 0.25};
    expect_near(mix(two, w).vec(), v3(0.75, 0.25, 0), 1e-15);
}

TEST(Mix, errors) {
    auto e1 = BlochState::basis(3, 0);
    std::vector<BlochState> two{e1, e1};
    std::vector<double> bad_sum{0.5, 0.6};
    EXPECT_THROW(mix(two, bad_sum), std::invalid_argument);
    std::vector<double> negative{1.5, -0.5};
    EXPECT_THROW(mix(two, negative), std::invalid_argument);
    std::vector<BlochState> mixed_d{e1, BlochState::basis(4, 0)};
    std::vector<double> half{0.5, 0.5};
    EXPECT_THROW(mix(mixed_d, half), std::invalid_argument);
}

TEST(Mix, is_affine) {
    auto rng = stream_rng(5, 0);
    std::vector<BlochState> states;
    for (int i = 0; i < 4; ++i) {
        states.emplace_back(random_unit_vector(3, rng) * 0.9);
    }
    std::vector<double> w{0.1, 0.2, 0.3, 0.4};
    BlochState m(random_unit_vector(3, rng));
    double expected = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        expected += w[i] * measure_prob(states[i], m);
    }
    EXPECT_NEAR(measure_prob(mix(states, w), m), expected, 1e-12);
}

TEST(ApplyMap, examples) {
    BlochState x(v3(0.3, 0.4, 0.5));
    expect_near(apply_map(OrthogonalMap::identity(3), x).vec(), x.vec(), 0.0);
    auto half_turn = OrthogonalMap::plane_rotation(3, 0, 1, std::numbers::pi);
    expect_near(apply_map(half_turn, BlochState::basis(3, 0)).vec(), v3(-1, 0, 0), 1e-15);
    auto e = OrthogonalMap::total_inversion(3);
    expect_near(apply_map(e, x).vec(), -x.vec(), 0.0);
    EXPECT_DOUBLE_EQ(e.determinant(), -1.0);
    EXPECT_FALSE(e.is_special());
    EXPECT_TRUE(half_turn.is_special());
}

TEST(ApplyMap, rejects_non_orthogonal) {
    Mat m = Mat::Identity(3, 3);
    m(0, 1) = 0.1;
    EXPECT_THROW(OrthogonalMap{m}, std::invalid_argument);
    EXPECT_THROW(apply_map(OrthogonalMap::identity(4), BlochState::basis(3, 0)), std::invalid_argument);
}

TEST(ApplyMap, preserves_norm) {
    auto rng = stream_rng(9, 0);
    OrthogonalMap r(random_rotation(6, rng));
    BlochState x(random_unit_vector(6, rng) * 0.7);
    EXPECT_NEAR(apply_map(r, x).norm(), 0.7, 1e-12);
}

TEST(Whiten, examples) {
    FiducialMetric id(Mat::Identity(3, 3));
    expect_near(whiten(id, v3(0.1, 0.2, 0.3)).vec(), v3(0.1, 0.2, 0.3), 1e-15);

    FiducialMetric d(Eigen::Vector3d(4, 1, 1).asDiagonal().toDenseMatrix());
    Vec raw = v3(0.5, 0, 0);
    EXPECT_NEAR(raw.dot(d.matrix() * raw), 1.0, 1e-15);
    auto y = whiten(d, raw);
    expect_near(y.vec(), v3(1, 0, 0), 1e-15);
    EXPECT_DOUBLE_EQ(measure_prob(y, y), 1.0);
    EXPECT_DOUBLE_EQ(d.eigenvalues()(0), 4.0);
}

TEST(Whiten, random_metrics_map_pure_states_to_sphere) {
    for (int k = 0; k < 100; ++k) {
        auto rng = stream_rng(21, static_cast<std::uint64_t>(k));
        Mat a = Mat::NullaryExpr(4, 4, [&]() { return std::normal_distribution<double>()(rng); });
        Mat dm = a * a.transpose() + 0.1 * Mat::Identity(4, 4);
        FiducialMetric metric(dm);
        Vec raw = random_unit_vector(4, rng);
        raw /= std::sqrt(raw.dot(dm * raw));
        EXPECT_NEAR(whiten(metric, raw).norm(), 1.0, 1e-12);
        EXPECT_LE((metric.sqrt_matrix() * metric.sqrt_matrix() - dm).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Whiten, rejects_bad_metric) {
    Mat indefinite = Eigen::Vector3d(1, -1, 1).asDiagonal().toDenseMatrix();
    EXPECT_THROW(FiducialMetric{indefinite}, std::invalid_argument);
    Mat asym = Mat::Identity(3, 3);
    asym(0, 1) = 0.5;
    EXPECT_THROW(FiducialMetric{asym}, std::invalid_argument);
    EXPECT_THROW(FiducialMetric(Mat::Identity(3, 3), 0.0), std::invalid_argument);
}

TEST(Decomposability, square_toy_world_fails) {
    auto square = ConvexStateSpace::toy_square();
    Eigen::Vector2d y = 0.5 * Eigen::Vector2d(1, 0) + 0.5 * Eigen::Vector2d(0, 1);
    EXPECT_TRUE(square.contains(y));
    EXPECT_FALSE(axiom1_decomposable(square, y).has_value());
}

TEST(Decomposability, square_vertices_and_axis_states_decompose) {
    auto square = ConvexStateSpace::toy_square();
    auto w = axiom1_decomposable(square, Eigen::Vector2d(0, -1));
    ASSERT_TRUE(w.has_value());
    EXPECT_NEAR(w->weight, 1.0, 1e-12);
    EXPECT_TRUE(axiom1_decomposable(square, Eigen::Vector2d(0.3, 0)).has_value());
}

TEST(Decomposability, disc_interior_decomposes) {
    auto disc = ConvexStateSpace::unit_disc();
    auto rng = stream_rng(4, 0);
    for (int k = 0; k < 1000; ++k) {
        Eigen::Vector2d s = random_unit_vector(2, rng) * std::uniform_real_distribution<double>(0, 0.999)(rng);
        auto w = axiom1_decomposable(disc, s);
        ASSERT_TRUE(w.has_value());
        Eigen::Vector2d rebuilt = w->weight * w->pure - (1 - w->weight) * w->pure;
        EXPECT_LE((rebuilt - s).norm(), 1e-12);
        EXPECT_GE(w->weight, 0.0);
        EXPECT_LE(w->weight, 1.0);
        EXPECT_TRUE(disc.distinguishes(w->pure, -w->pure));
    }
    auto centre = axiom1_decomposable(disc, Eigen::Vector2d(0, 0));
    ASSERT_TRUE(centre.has_value());
    EXPECT_DOUBLE_EQ(centre->weight, 0.5);
    auto pure = axiom1_decomposable(disc, Eigen::Vector2d(0.6, 0.8));
    ASSERT_TRUE(pure.has_value());
    EXPECT_NEAR(pure->weight, 1.0, 1e-12);
}

TEST(Decomposability, rejects_states_outside) {
    EXPECT_THROW(axiom1_decomposable(ConvexStateSpace::toy_square(), Eigen::Vector2d(0.8, 0.8)), std::domain_error);
    EXPECT_THROW(axiom1_decomposable(ConvexStateSpace::unit_disc(), Eigen::Vector2d(1.1, 0)), std::domain_error);
}

TEST(ConvexStateSpace, rejects_effect_leaving_unit_interval) {
    std::vector<Eigen::Vector2d> v{{1, 0}, {0, 1}, {-1, 0}};
    std::vector<ConvexStateSpace::Effect> bad{{0.5, Eigen::Vector2d(1.0, 0.0)}};
    EXPECT_THROW(ConvexStateSpace::polygon(v, bad), std::invalid_argument);
}
