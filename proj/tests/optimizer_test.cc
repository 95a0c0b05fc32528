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

#include "hitwalk/optimizer.h"

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hitwalk/errors.h"
#include "hitwalk/golden.h"
#include "hitwalk/hitting.h"
#include "hitwalk/parallel.h"

using namespace hitwalk;

TEST(Golden, finds_parabola_minimum) {
    const auto r = golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3) + 2.0; }, 0.0, 1.0, 1e-8);
    EXPECT_NEAR(r.x, 0.3, 1e-7);
    EXPECT_NEAR(r.fx, 2.0, 1e-14);
    EXPECT_GT(r.evaluations.size(), 10u);
    for (const auto &[x, fx] : r.evaluations) EXPECT_GE(fx, r.fx);
}

TEST(Golden, monotone_function_goes_to_edge) {
    const auto r = golden_section_minimize([](double x) { return x; }, 0.0, 1.0, 1e-6);
    EXPECT_LT(r.x, 1e-5);
}

TEST(Parallel, visits_every_index_once) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (const auto &h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, rethrows_lowest_failing_index) {
    try {
        parallel_for(100, [](std::size_t i) {
            if (i == 37 || i == 80) throw std::runtime_error(std::to_string(i));
        });
        FAIL() << "no exception";
    } catch (const std::runtime_error &e) {
        EXPECT_STREQ(e.what(), "37");
    }
}

TEST(Optimizer, classicalized_walk_prefers_no_reset) {
    const auto g = ChainGeometry::build(0, -3, 3);
    const auto r = minimize_mht(g, CoinSpec::plus(), 0.5, 20);
    EXPECT_EQ(r.p_star, 0.0);
    EXPECT_NEAR(r.mht_star, 9.0, 1e-8);
}

TEST(Optimizer, report_is_consistent) {
    const auto g = ChainGeometry::build(0, -4, 4);
    const auto r = minimize_mht(g, CoinSpec::plus(), 0.0, 30);
    EXPECT_EQ(r.scan.size(), 31u);
    EXPECT_EQ(r.evaluations, r.scan.size() + r.refinement.size());
    EXPECT_EQ(r.scan.front().first, 0.0);
    EXPECT_NEAR(r.scan.back().first, 0.99, 1e-15);
    for (const auto &[p, v] : r.scan) EXPECT_GE(v, r.mht_star);
    for (const auto &[p, v] : r.refinement) EXPECT_GE(v, r.mht_star);
    EXPECT_GE(r.p_star, 0.0);
    EXPECT_LE(r.p_star, 0.99);
    EXPECT_NEAR(quantum_mht({g, CoinSpec::plus(), r.p_star, 0.0}), r.mht_star, 1e-9 * r.mht_star);
    EXPECT_LE(r.mht_star, 16.0 + 1e-8);
}

TEST(Optimizer, input_validation) {
    const auto g = ChainGeometry::build(0, -2, 2);
    EXPECT_THROW(minimize_mht(g, CoinSpec::plus(), 1.5), InvalidArgument);
    EXPECT_THROW(minimize_mht(g, CoinSpec::plus(), 0.0, 1), InvalidArgument);
}
