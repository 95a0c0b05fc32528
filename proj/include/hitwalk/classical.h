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

#ifndef HITWALK_CLASSICAL_H
#define HITWALK_CLASSICAL_H

// Classical +-1 random walk with absorbing targets and optional reset.
// A reset tick replaces the move: the walker sits at x_start after it.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hitwalk/sampling.h"
#include "hitwalk/walk.h"

namespace hitwalk {

struct ClassicalWalkSpec {
    ChainGeometry geometry;
    double reset_p = 0.0;
};

/// Expected steps to absorption from each interior site.
struct HittingVector {
    std::vector<int> sites;
    std::vector<double> h;

    double at(int position) const;
};

/// |(x_right - x_start)(x_left - x_start)|
double mht_closed_form(const ChainGeometry &geometry);

/// Solves h(x) = 1 + p h(x0) + (1-p)/2 (h(x-1) + h(x+1)), h(targets) = 0.
/// Throws InvalidArgument unless 0 <= p < 1.
HittingVector hitting_vector(const ClassicalWalkSpec &spec);
double mht_with_reset(const ClassicalWalkSpec &spec);

/// Throws InvalidArgument when n == 0, CensoringTooHigh past 1% censoring.
MhtEstimate classical_monte_carlo(const ClassicalWalkSpec &spec, std::size_t n, std::uint64_t seed,
                                  std::size_t max_steps = 100'000);

}  // namespace hitwalk

#endif  // HITWALK_CLASSICAL_H
