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

// Randomized channel generation and CPTP residual checks, shared by the
// unit tests and the acceptance runner.
#ifndef HITWALK_TESTS_CHANNEL_CASES_H
#define HITWALK_TESTS_CHANNEL_CASES_H

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hitwalk/channels.h"
#include "test_util.h"

namespace hitwalk::testing {

inline CoinMatrix random_coin(std::mt19937_64 &rng) {
    const ComplexMatrix a = random_matrix(2, 2, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a.eigen());
    return CoinMatrix(qr.householderQ());
}

inline ChainGeometry random_geometry(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> left(-4, -1), right(1, 4);
    const int l = left(rng), r = right(rng);
    std::uniform_int_distribution<int> start(l + 1, r - 1);
    return ChainGeometry::build(start(rng), l, r);
}

inline WalkState random_pure_state(std::size_t n, std::mt19937_64 &rng) {
    ComplexVector v = random_vector(n, rng);
    v.normalize();
    return WalkState{v};
}

inline KrausChannel random_primitive_channel(const WalkOperators &ops, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto n = ops.geometry.dimension();
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
        case 0:
            return identity_channel(n);
        case 1:
            return unitary_channel(ops);
        case 2:
            return reset_channel(ops, ResetParams{0.999 * unit(rng), random_pure_state(n, rng)});
        case 3:
            return bitflip_channel(NoiseParams{unit(rng)}, ops.geometry);
        default:
            return amplitude_damping_channel(unit(rng), ops.geometry);
    }
}

/// A primitive channel or a composition of two or three primitives.
inline KrausChannel random_channel(const WalkOperators &ops, std::mt19937_64 &rng) {
    KrausChannel ch = random_primitive_channel(ops, rng);
    const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < extra; ++i) ch = compose(ch, random_primitive_channel(ops, rng));
    return ch;
}

struct ChannelResiduals {
    double completeness = 0.0;  // ||sum K^dagger K - I||_inf
    double trace = 0.0;         // |Tr E(rho) - Tr rho|
    double hermiticity = 0.0;   // max |E(rho) - E(rho)^dagger|
    double positivity = 0.0;    // max(0, -lambda_min(E(rho)))

    double worst() const { return std::max({completeness, trace, hermiticity, positivity}); }
};

inline ChannelResiduals channel_residuals(const KrausChannel &channel, const ComplexMatrix &rho) {
    const ComplexMatrix out = channel.apply(rho);
    ChannelResiduals r;
    r.completeness = channel.completeness_residual();
    r.trace = std::abs(out.trace() - rho.trace());
    r.hermiticity = hermiticity_defect(out);
    r.positivity = std::max(0.0, -min_eigenvalue(out));
    return r;
}

struct ChannelSuiteSummary {
    int cases = 0;
    int failures = 0;
    ChannelResiduals worst;
    std::string first_failure;
};

inline ChannelSuiteSummary run_channel_suite(int cases, std::uint64_t seed, double tolerance = 1e-10) {
    std::mt19937_64 rng(seed);
    ChannelSuiteSummary s;
    for (int i = 0; i < cases; ++i) {
        const auto geometry = random_geometry(rng);
        const auto ops = build_operators(geometry, random_coin(rng));
        const KrausChannel channel = random_channel(ops, rng);
        const auto rank = std::uniform_int_distribution<std::size_t>(1, geometry.dimension())(rng);
        const ComplexMatrix rho = random_density(geometry.dimension(), rng, rank);
        const auto r = channel_residuals(channel, rho);
        ++s.cases;
        s.worst.completeness = std::max(s.worst.completeness, r.completeness);
        s.worst.trace = std::max(s.worst.trace, r.trace);
        s.worst.hermiticity = std::max(s.worst.hermiticity, r.hermiticity);
        s.worst.positivity = std::max(s.worst.positivity, r.positivity);
        if (!(r.worst() < tolerance)) {
            if (s.failures == 0) s.first_failure = "case " + std::to_string(i) + " (" + channel.label() + ")";
            ++s.failures;
        }
    }
    return s;
}

}  // namespace hitwalk::testing

#endif  // HITWALK_TESTS_CHANNEL_CASES_H
