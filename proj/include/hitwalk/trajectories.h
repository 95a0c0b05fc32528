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

#ifndef HITWALK_TRAJECTORIES_H
#define HITWALK_TRAJECTORIES_H

// Quantum-trajectory unraveling of the measured walk with reset and coin
// bit-flip noise: an independent statistical estimate of the mean hitting time.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hitwalk/sampling.h"
#include "hitwalk/walk.h"

namespace hitwalk {

struct TrajectoryConfig {
    std::size_t n_trajectories = 100'000;
    std::uint64_t seed = 1;
    std::size_t max_steps = 100'000;
    double reset_p = 0.0;
    double noise_q = 0.0;
};

/// Detection step of every trajectory in index order; 0 = censored.
/// Each step: reset with probability p (else psi <- U psi), flip the coin with
/// probability q, then detect with probability ||P psi||^2 or continue with
/// W psi / ||W psi||.
std::vector<std::uint64_t> detection_times(const TrajectoryConfig &config, const ChainGeometry &geometry,
                                           const CoinSpec &coin);

/// Throws InvalidArgument on a bad config, CensoringTooHigh past 1% censoring.
MhtEstimate run_trajectories(const TrajectoryConfig &config, const ChainGeometry &geometry, const CoinSpec &coin);

}  // namespace hitwalk

#endif  // HITWALK_TRAJECTORIES_H
