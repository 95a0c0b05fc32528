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

#include "hitwalk/reference.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "hitwalk/errors.h"
#include "hitwalk/hitting.h"

using namespace hitwalk;
namespace ref = hitwalk::reference;

namespace {

// Exact value of sum a_k 2^-k scaled by 2^(N-1), in 128-bit integers.
template <std::size_t N>
__int128 scaled_at_half(const std::array<std::int64_t, N> &a) {
    __int128 acc = 0;
    for (std::size_t k = 0; k < N; ++k) acc += static_cast<__int128>(a[k]) << (N - 1 - k);
    return acc;
}

}  // namespace

TEST(Reference, coefficient_sums) {
    const auto p1 = std::accumulate(ref::kNumerator.begin(), ref::kNumerator.end(), std::int64_t{0});
    const auto q1 = std::accumulate(ref::kDenominator.begin(), ref::kDenominator.end(), std::int64_t{0});
    EXPECT_EQ(p1, 1024);
    EXPECT_EQ(q1, 0);
    EXPECT_EQ(ref::kNumerator.front(), 25);
    EXPECT_EQ(ref::kDenominator.front(), 1);
    EXPECT_EQ(ref::kNumerator.back(), 64);
    EXPECT_EQ(ref::kDenominator.back(), 8);
}

TEST(Reference, compensated_horner_within_bound) {
    const double exact_p = static_cast<double>(scaled_at_half(ref::kNumerator)) / std::ldexp(1.0, 31);
    const double exact_q = static_cast<double>(scaled_at_half(ref::kDenominator)) / std::ldexp(1.0, 29);
    const auto p = ref::compensated_horner(ref::kNumerator, 0.5);
    const auto q = ref::compensated_horner(ref::kDenominator, 0.5);
    EXPECT_LE(std::abs(p.value - exact_p), p.error_bound);
    EXPECT_LE(std::abs(q.value - exact_q), q.error_bound);
    EXPECT_EQ(ref::compensated_horner(ref::kNumerator, 0.0).value, 25.0);
    EXPECT_EQ(ref::compensated_horner(ref::kNumerator, 1.0).value, 1024.0);
    EXPECT_EQ(ref::compensated_horner(ref::kDenominator, 1.0).value, 0.0);
}

TEST(Reference, evaluate_known_points) {
    EXPECT_EQ(ref::evaluate(0.0), 25.0);
    EXPECT_NEAR(ref::evaluate(0.1), 25.894286852302513759, 1e-13);
}

TEST(Reference, pole_and_domain) {
    EXPECT_THROW(ref::evaluate(1.0), PoleEncountered);
    EXPECT_THROW(ref::evaluate(-0.01), InvalidArgument);
    EXPECT_THROW(ref::evaluate(1.01), InvalidArgument);
    EXPECT_THROW(ref::evaluate(std::nan("")), InvalidArgument);
    EXPECT_NO_THROW(ref::evaluate(0.999));
    EXPECT_THROW(ref::argmin_on_grid(10), InvalidArgument);
}

TEST(Reference, grows_without_bound_near_one) {
    double previous = ref::evaluate(0.5);
    for (double p : {0.9, 0.99, 0.999}) {
        const double v = ref::evaluate(p);
        EXPECT_GT(v, previous);
        previous = v;
    }
}

TEST(Reference, argmin) {
    const auto m = ref::argmin_on_grid();
    // Root of d/dp (P/Q) computed with exact rationals.
    EXPECT_NEAR(m.p_star, 0.034458071684675974, 1e-6);
    EXPECT_NEAR(m.mht_star, 22.632297447685981, 1e-9);
}

TEST(Reference, agrees_with_resolvent_engine) {
    for (double p : {0.02, 0.3, 0.66, 0.9}) {
        const double engine = quantum_mht({ChainGeometry::build(0, -ref::kTargetHalfwidth, ref::kTargetHalfwidth),
                                           CoinSpec::plus(), p, 0.0});
        const double exact = ref::evaluate(p);
        EXPECT_LT(std::abs(engine - exact) / exact, 1e-6) << p;
    }
}
