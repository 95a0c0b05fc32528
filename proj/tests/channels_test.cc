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

#include "hitwalk/channels.h"

#include <gtest/gtest.h>

#include <cmath>

#include "channel_cases.h"
#include "hitwalk/errors.h"
#include "test_util.h"

using namespace hitwalk;
using namespace hitwalk::testing;

namespace {

ComplexMatrix coin_density(const ChainGeometry &g, int x, const Eigen::Matrix2cd &block) {
    ComplexMatrix rho(g.dimension(), g.dimension());
    const auto i = g.index(x, Coin::plus);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) rho(i + a, i + b) = block(a, b);
    return rho;
}

}  // namespace

TEST(Channels, identity_is_identity) {
    const auto ch = identity_channel(6);
    const auto rho = random_density(6);
    EXPECT_EQ(max_abs_diff(ch.apply(rho), rho), 0.0);
    EXPECT_EQ(ch.completeness_residual(), 0.0);
}

TEST(Channels, rejects_incomplete_sets) {
    EXPECT_THROW(KrausChannel({Complex(0.5) * ComplexMatrix::identity(2)}, "half"), InvalidChannel);
    EXPECT_THROW(KrausChannel({}, "empty"), InvalidChannel);
    EXPECT_THROW(KrausChannel({ComplexMatrix::identity(2), ComplexMatrix(3, 3)}, "ragged"), InvalidChannel);
    EXPECT_THROW(unitary_channel(Complex(1.1) * ComplexMatrix::identity(2)), InvalidChannel);
    const auto g = ChainGeometry::build(0, -2, 2);
    const auto ops = build_operators(g);
    EXPECT_THROW(reset_channel(ops, ResetParams{1.0, initial_state(g, CoinSpec::plus())}), InvalidChannel);
    EXPECT_THROW(reset_channel(ops, ResetParams{-0.1, initial_state(g, CoinSpec::plus())}), InvalidChannel);
    EXPECT_THROW(reset_channel(ops, ResetParams{0.1, WalkState{ComplexVector::Ones(10)}}), InvalidChannel);
    EXPECT_THROW(bitflip_channel(NoiseParams{1.5}, g), InvalidChannel);
    EXPECT_THROW(amplitude_damping_channel(-0.2, g), InvalidChannel);
    EXPECT_THROW(compose(identity_channel(4), identity_channel(6)), InvalidChannel);
    EXPECT_THROW(identity_channel(4).apply(ComplexMatrix::identity(3)), DimensionMismatch);
}

TEST(Channels, reset_matches_direct_mixture) {
    // Oracle: (1-p) U rho U^dagger + p Tr(rho) |psi0><psi0|, evaluated by hand.
    const auto g = ChainGeometry::build(0, -3, 3);
    const auto ops = build_operators(g);
    const auto psi0 = initial_state(g, CoinSpec::plus());
    const auto ch = reset_channel(ops, ResetParams{0.5, psi0});
    EXPECT_EQ(ch.operators().size(), g.dimension() + 1);
    EXPECT_LT(ch.completeness_residual(), 1e-12);
    ASSERT_TRUE(ch.reset().has_value());
    EXPECT_EQ(ch.reset()->weight, 0.5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto rho = random_density(g.dimension());
        const ComplexMatrix expected =
            Complex(0.5) * (ops.unitary * rho * ops.unitary.adjoint()) + Complex(0.5) * rho.trace() * psi0.density();
        EXPECT_LT(max_abs_diff(ch.apply(rho), expected), 1e-14);
    }
}

TEST(Channels, reset_at_zero_is_unitary_evolution) {
    const auto g = ChainGeometry::build(0, -3, 3);
    const auto ops = build_operators(g);
    const auto ch = reset_channel(ops, ResetParams{0.0, initial_state(g, CoinSpec::plus())});
    const auto rho = random_density(g.dimension());
    EXPECT_LT(max_abs_diff(ch.apply(rho), unitary_channel(ops).apply(rho)), 1e-15);
}

TEST(Channels, bitflip_damps_sigma_x_coherence) {
    // In the sigma_x eigenbasis a flip with probability q multiplies the
    // off-diagonal element by (1 - 2q) and leaves populations alone.
    const auto g = ChainGeometry::build(0, -1, 1);
    const double h = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd hx;
    hx << h, h, h, -h;
    Eigen::Matrix2cd in_x;
    in_x << 0.7, Complex(0.1, 0.3), Complex(0.1, -0.3), 0.3;
    const auto rho = coin_density(g, 0, hx * in_x * hx.adjoint());
    for (double q : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) {
        const auto out = bitflip_channel(NoiseParams{q}, g).apply(rho);
        const auto i = g.index(0, Coin::plus);
        Eigen::Matrix2cd block;
        block << out(i, i), out(i, i + 1), out(i + 1, i), out(i + 1, i + 1);
        const Eigen::Matrix2cd back = hx.adjoint() * block * hx;
        EXPECT_NEAR(std::abs(back(0, 0) - 0.7), 0.0, 1e-15) << q;
        EXPECT_NEAR(std::abs(back(1, 1) - 0.3), 0.0, 1e-15) << q;
        EXPECT_NEAR(std::abs(back(0, 1) - (1.0 - 2.0 * q) * Complex(0.1, 0.3)), 0.0, 1e-15) << q;
    }
}

TEST(Channels, bitflip_half_dephases_sigma_x) {
    const auto g = ChainGeometry::build(0, -1, 1);
    const auto rho = coin_density(g, 0, (Eigen::Matrix2cd() << 1.0, 0.0, 0.0, 0.0).finished());
    const auto out = bitflip_channel(NoiseParams{0.5}, g).apply(rho);
    const auto i = g.index(0, Coin::plus);
    EXPECT_NEAR(out(i, i).real(), 0.5, 1e-15);
    EXPECT_NEAR(out(i + 1, i + 1).real(), 0.5, 1e-15);
}

TEST(Channels, amplitude_damping_moves_population_up) {
    const auto g = ChainGeometry::build(0, -1, 1);
    const auto rho = coin_density(g, 0, (Eigen::Matrix2cd() << 0.5, 0.0, 0.0, 0.5).finished());
    const auto out = amplitude_damping_channel(0.3, g).apply(rho);
    const auto i = g.index(0, Coin::plus);
    EXPECT_NEAR(out(i, i).real(), 0.65, 1e-15);
    EXPECT_NEAR(out(i + 1, i + 1).real(), 0.35, 1e-15);
    EXPECT_EQ(out(i, i + 1), Complex(0.0));
}

TEST(Channels, composition_matches_sequential_application) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_geometry(rng);
        const auto ops = build_operators(g, random_coin(rng));
        const auto a = random_primitive_channel(ops, rng);
        const auto b = random_primitive_channel(ops, rng);
        const auto rho = random_density(g.dimension(), rng);
        const auto ab = compose(a, b);
        EXPECT_EQ(ab.operators().size(), a.operators().size() * b.operators().size());
        EXPECT_LT(max_abs_diff(ab.apply(rho), b.apply(a.apply(rho))), 1e-12) << ab.label();
    }
}

TEST(Channels, composition_keeps_reset_structure) {
    const auto g = ChainGeometry::build(0, -3, 3);
    const auto ops = build_operators(g);
    const auto psi0 = initial_state(g, CoinSpec::plus());
    const auto reset = reset_channel(ops, ResetParams{0.3, psi0});
    const auto flip = bitflip_channel(NoiseParams{0.2}, g);

    const auto reset_then_flip = compose(reset, flip);
    ASSERT_TRUE(reset_then_flip.reset().has_value());
    EXPECT_EQ(reset_then_flip.reset()->weight, 0.3);
    EXPECT_LT(max_abs_diff(reset_then_flip.reset()->state, flip.apply(psi0.density())), 1e-15);

    const auto flip_then_reset = compose(flip, reset);
    ASSERT_TRUE(flip_then_reset.reset().has_value());
    EXPECT_LT(max_abs_diff(flip_then_reset.reset()->state, psi0.density()), 1e-15);

    EXPECT_FALSE(compose(reset, reset).reset().has_value());

    // The flagged operators must reproduce the replacement term on their own.
    for (const auto *ch : {&reset_then_flip, &flip_then_reset}) {
        const auto rho = random_density(g.dimension());
        ComplexMatrix partial(g.dimension(), g.dimension());
        for (std::size_t i : ch->reset()->operator_indices) {
            const auto &k = ch->operators()[i];
            partial += k * rho * k.adjoint();
        }
        EXPECT_LT(max_abs_diff(partial, Complex(ch->reset()->weight) * ch->reset()->state), 1e-14);
    }
}

TEST(ChannelProperties, randomized_cptp_cases) {
    const auto summary = run_channel_suite(200, 99);
    EXPECT_EQ(summary.failures, 0) << summary.first_failure;
    EXPECT_LT(summary.worst.worst(), 1e-10);
}
