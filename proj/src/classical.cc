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

#include "hitwalk/classical.h"

#include <cmath>
#include <string>

#include "hitwalk/errors.h"
#include "hitwalk/numerics.h"
#include "hitwalk/parallel.h"

namespace hitwalk {

namespace {

void require_reset_probability(double p) {
    if (!(std::isfinite(p) && p >= 0.0 && p < 1.0)) {
        throw InvalidArgument("reset probability " + std::to_string(p) + " outside [0, 1)");
    }
}

}  // namespace

double HittingVector::at(int position) const {
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (sites[i] == position) return h[i];
    }
    throw InvalidArgument("position " + std::to_string(position) + " is not an interior site");
}

double mht_closed_form(const ChainGeometry &geometry) {
    const long long right = geometry.x_right() - geometry.x_start();
    const long long left = geometry.x_left() - geometry.x_start();
    return static_cast<double>(std::llabs(right * left));
}

HittingVector hitting_vector(const ClassicalWalkSpec &spec) {
    require_reset_probability(spec.reset_p);
    const ChainGeometry &g = spec.geometry;
    const std::size_t interior = g.site_count() - 2;
    const double p = spec.reset_p;
    const double hop = 0.5 * (1.0 - p);
    const auto row_of = [&](int x) { return static_cast<std::size_t>(x - g.x_left() - 1); };

    ComplexMatrix a = ComplexMatrix::identity(interior);
    ComplexVector rhs = ComplexVector::Ones(static_cast<Eigen::Index>(interior));
    HittingVector out;
    for (int x = g.x_left() + 1; x < g.x_right(); ++x) {
        const std::size_t r = row_of(x);
        out.sites.push_back(x);
        a(r, row_of(g.x_start())) -= p;
        if (!g.is_target(x - 1)) a(r, row_of(x - 1)) -= hop;
        if (!g.is_target(x + 1)) a(r, row_of(x + 1)) -= hop;
    }
    ComplexVector h;
    try {
        h = lu_solve(a, rhs);
    } catch (const SingularMatrix &e) {
        throw InfiniteMHT(std::string("classical hitting system is singular: ") + e.what());
    }
    out.h.reserve(interior);
    for (Eigen::Index i = 0; i < h.size(); ++i) out.h.push_back(h[i].real());
    return out;
}

double mht_with_reset(const ClassicalWalkSpec &spec) { return hitting_vector(spec).at(spec.geometry.x_start()); }

MhtEstimate classical_monte_carlo(const ClassicalWalkSpec &spec, std::size_t n, std::uint64_t seed,
                                  std::size_t max_steps) {
    require_reset_probability(spec.reset_p);
    if (n == 0) throw InvalidArgument("need at least one walker");
    if (max_steps == 0) throw InvalidArgument("max_steps must be positive");
    const ChainGeometry &g = spec.geometry;
    std::vector<std::uint64_t> times(n, 0);
    parallel_for(n, [&](std::size_t i) {
        auto rng = substream(seed, i);
        int x = g.x_start();
        for (std::size_t t = 1; t <= max_steps; ++t) {
            if (uniform01(rng) < spec.reset_p) {
                x = g.x_start();
            } else {
                x += uniform01(rng) < 0.5 ? 1 : -1;
            }
            if (g.is_target(x)) {
                times[i] = t;
                return;
            }
        }
    });
    return aggregate_detection_times(times);
}

}  // namespace hitwalk
