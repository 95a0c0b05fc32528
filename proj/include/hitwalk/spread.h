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

#ifndef HITWALK_SPREAD_H
#define HITWALK_SPREAD_H

// Spreading of the unmeasured walk on an open lattice centred at x = 0:
// position distributions and mean squared displacement over time.

#include <cstddef>
#include <optional>
#include <vector>

#include "hitwalk/walk.h"

namespace hitwalk {

enum class WalkModel { classical, quantum };

struct SpreadConfig {
    WalkModel model = WalkModel::quantum;
    std::size_t steps = 100;
    double sigma = 0.0;  // Gaussian width; 0 = localized at x = 0
    CoinSpec coin = CoinSpec::symmetric();
    std::size_t lattice_halfwidth = 0;  // 0 = smallest valid
    std::vector<std::size_t> distributions_at;

    /// steps + ceil(6 sigma) + 2
    std::size_t required_halfwidth() const;
};

struct Distribution {
    std::size_t t = 0;
    std::vector<int> positions;
    std::vector<double> probability;
};

struct SpreadResult {
    std::vector<double> msd;  // index t = 0..steps
    std::vector<Distribution> distributions;
    std::optional<double> fitted_exponent;  // slope of log MSD vs log t
    std::size_t fit_begin = 0;
    std::size_t fit_end = 0;
};

/// Throws LatticeTooSmall when the halfwidth is below required_halfwidth()
/// or probability reaches the lattice edge (> 1e-12).
SpreadResult evolve_distribution(const SpreadConfig &config);

/// Amplitudes proportional to exp(-(x / 2 sigma)^2) for |x| <= 6 sigma, all on
/// the given coin, normalized. sigma = 0 gives the state localized at x = 0.
/// Throws InvalidArgument for negative sigma or when 6 sigma exceeds the lattice.
WalkState gaussian_initial_state(double sigma, const CoinSpec &coin, std::size_t lattice_halfwidth);

/// Variance of a distribution over integer positions.
double position_variance(const std::vector<int> &positions, const std::vector<double> &probability);

/// Least-squares slope of log y against log t over t in [begin, end]
/// (points with y <= 0 are skipped); nullopt with fewer than two points.
std::optional<double> fit_power_law(const std::vector<double> &y, std::size_t begin, std::size_t end);

}  // namespace hitwalk

#endif  // HITWALK_SPREAD_H
