// Copyright 2026 The hitwalk Authors
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

#include "hitwalk/walk.h"

#include <gtest/gtest.h>

#include <cmath>

#include "hitwalk/errors.h"
#include "test_util.h"

using namespace hitwalk;
using hitwalk::testing::max_abs_diff;

TEST(Geometry, rejects_bad_ordering) {
    EXPECT_THROW(ChainGeometry::build(0, 0, 5), InvalidGeometry);
    EXPECT_THROW(ChainGeometry::build(5, -5, 5), InvalidGeometry);
    EXPECT_THROW(ChainGeometry::build(0, 5, -5), InvalidGeometry);
    EXPECT_NO_THROW(ChainGeometry::build(0, -1, 1));
}

TEST(Geometry, index_round_trip) {
    const auto g = ChainGeometry::build(1, -3, 7);
    EXPECT_EQ(g.site_count(), 11u);
    EXPECT_EQ(g.dimension(), 22u);
    EXPECT_FALSE(g.symmetric());
    EXPECT_EQ(g.index(-3, Coin::plus), 0u);
    EXPECT_EQ(g.index(-3, Coin::minus), 1u);
    EXPECT_EQ(g.index(7, Coin::minus), 21u);
    for (std::size_t k = 0; k < g.dimension(); ++k) {
        const auto b = g.basis(k);
        EXPECT_EQ(g.index(b.position, b.coin), k);
    }
    EXPECT_TRUE(g.is_target(-3));
    EXPECT_TRUE(g.is_target(7));
    EXPECT_FALSE(g.is_target(2));
    EXPECT_TRUE(ChainGeometry::build(0, -5, 5).symmetric());
}

TEST(Coin, validation) {
    EXPECT_NO_THROW(validate_coin_unitary(hadamard_like_coin()));
    CoinMatrix bad = CoinMatrix::Identity();
    bad(0, 0) = 2.0;
    EXPECT_THROW(validate_coin_unitary(bad), InvalidCoin);
    EXPECT_THROW(CoinSpec::explicit_coin(1.0, 1.0), InvalidCoin);
    const auto c = CoinSpec::explicit_coin(Complex(0.6, 0.0), Complex(0.0, 0.8));
    EXPECT_EQ(c.down(), Complex(0.0, 0.8));
    const auto s = CoinSpec::symmetric();
    EXPECT_NEAR(std::abs(s.up()), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s.down().imag(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Operators, unitary_and_projectors) {
    for (int half : {1, 3, 5, 6}) {
        const auto ops = build_operators(ChainGeometry::build(0, -half, half));
        const auto n = ops.geometry.dimension();
        const auto id = ComplexMatrix::identity(n);
        EXPECT_LT(max_abs_diff(ops.unitary * ops.unitary.adjoint(), id), 1e-12);
        EXPECT_LT(max_abs_diff(ops.unitary.adjoint() * ops.unitary, id), 1e-12);
        EXPECT_EQ(max_abs_diff(ops.projector + ops.survivor, id), 0.0);
        EXPECT_EQ(max_abs_diff(ops.projector * ops.projector, ops.projector), 0.0);
        EXPECT_EQ(ops.projector.trace(), Complex(4.0));
        EXPECT_LT(max_abs_diff(ops.step * ops.coin, ops.unitary), 1e-15);
    }
}

TEST(Operators, step_moves_coin_conditioned) {
    const auto g = ChainGeometry::build(0, -2, 2);
    const auto ops = build_operators(g);
    EXPECT_EQ(ops.step(g.index(1, Coin::plus), g.index(0, Coin::plus)), Complex(1.0));
    EXPECT_EQ(ops.step(g.index(-1, Coin::minus), g.index(0, Coin::minus)), Complex(1.0));
    // periodic wrap at the edges
    EXPECT_EQ(ops.step(g.index(-2, Coin::plus), g.index(2, Coin::plus)), Complex(1.0));
    EXPECT_EQ(ops.step(g.index(2, Coin::minus), g.index(-2, Coin::minus)), Complex(1.0));
}

TEST(Operators, structured_step_matches_dense) {
    const auto g = ChainGeometry::build(1, -4, 6);
    const auto ops = build_operators(g);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexVector psi = hitwalk::testing::random_vector(g.dimension());
        const ComplexVector dense = ops.unitary * psi;
        apply_unitary(psi, g, ops.coin_block);
        EXPECT_LT(norm_inf(psi - dense), 1e-14);
    }
}

TEST(Walk, initial_state_is_localized) {
    const auto g = ChainGeometry::build(0, -5, 5);
    const auto psi = initial_state(g, CoinSpec::plus());
    EXPECT_EQ(psi.norm_squared(), 1.0);
    EXPECT_EQ(psi.amplitudes[g.index(0, Coin::plus)], Complex(1.0));
    const auto rho = psi.density();
    EXPECT_EQ(rho.trace(), Complex(1.0));
}

TEST(Walk, conditioned_step_conserves_probability) {
    const auto g = ChainGeometry::build(0, -3, 3);
    const auto ops = build_operators(g);
    WalkState state = initial_state(g, CoinSpec::symmetric());
    double detected = 0.0;
    for (int t = 0; t < 300; ++t) {
        const auto step = conditioned_step(state, ops);
        detected += step.detection_probability;
        EXPECT_NEAR(step.survivor.norm_squared() + step.detection_probability, state.norm_squared(), 1e-14);
        state = step.survivor;
    }
    EXPECT_NEAR(detected + state.norm_squared(), 1.0, 1e-12);
    EXPECT_GT(detected, 0.999);
}

TEST(Walk, first_detection_at_distance_three) {
    // With targets at +-3 no amplitude can reach them in fewer than 3 steps.
    const auto g = ChainGeometry::build(0, -3, 3);
    const auto ops = build_operators(g);
    WalkState state = initial_state(g, CoinSpec::plus());
    for (int t = 1; t <= 3; ++t) {
        const auto step = conditioned_step(state, ops);
        if (t < 3)
            EXPECT_EQ(step.detection_probability, 0.0);
        else
            EXPECT_GT(step.detection_probability, 0.0);
        state = step.survivor;
    }
}

TEST(Walk, coin_flip_and_target_removal) {
    const auto g = ChainGeometry::build(0, -2, 2);
    ComplexVector psi = ComplexVector::Zero(g.dimension());
    psi[g.index(0, Coin::plus)] = 0.6;
    psi[g.index(2, Coin::minus)] = Complex(0.0, 0.8);
    EXPECT_NEAR(wrap_amplitude(psi, g), 0.64, 1e-15);
    apply_coin_flip(psi);
    EXPECT_EQ(psi[g.index(0, Coin::minus)], Complex(0.6));
    EXPECT_NEAR(remove_target_amplitude(psi, g), 0.64, 1e-15);
    EXPECT_NEAR(psi.squaredNorm(), 0.36, 1e-15);
}
