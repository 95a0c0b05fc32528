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

#include "hitwalk/trajectories.h"

#include <cmath>
#include <string>

#include "hitwalk/errors.h"
#include "hitwalk/parallel.h"

namespace hitwalk {

namespace {

void validate(const TrajectoryConfig &config) {
    if (config.n_trajectories == 0) throw InvalidArgument("n_trajectories must be at least 1");
    if (config.max_steps == 0) throw InvalidArgument("max_steps must be at least 1");
    if (!(config.reset_p >= 0.0 && config.reset_p < 1.0)) {
        throw InvalidArgument("reset p = " + std::to_string(config.reset_p) + " outside [0, 1)");
    }
    if (!(config.noise_q >= 0.0 && config.noise_q <= 1.0)) {
        throw InvalidArgument("noise q = " + std::to_string(config.noise_q) + " outside [0, 1]");
    }
}

}  // namespace

std::vector<std::uint64_t> detection_times(const TrajectoryConfig &config, const ChainGeometry &geometry,
                                           const CoinSpec &coin) {
    validate(config);
    const CoinMatrix coin_block = hadamard_like_coin();
    const ComplexVector psi0 = initial_state(geometry, coin).amplitudes;
    std::vector<std::uint64_t> times(config.n_trajectories, 0);
    parallel_for(config.n_trajectories, [&](std::size_t i) {
        auto rng = substream(config.seed, i);
        ComplexVector psi = psi0;
        for (std::size_t t = 1; t <= config.max_steps; ++t) {
            if (config.reset_p > 0.0 && uniform01(rng) < config.reset_p) {
                psi = psi0;
            } else {
                apply_unitary(psi, geometry, coin_block);
            }
            if (config.noise_q > 0.0 && uniform01(rng) < config.noise_q) apply_coin_flip(psi);

            ComplexVector survivor = psi;
            const double detect = remove_target_amplitude(survivor, geometry) / psi.squaredNorm();
            if (detect > 0.0 && uniform01(rng) < detect) {
                times[i] = t;
                return;
            }
            psi = survivor / survivor.norm();
        }
    });
    return times;
}

MhtEstimate run_trajectories(const TrajectoryConfig &config, const ChainGeometry &geometry, const CoinSpec &coin) {
    const std::vector<std::uint64_t> times = detection_times(config, geometry, coin);
    return aggregate_detection_times(times);
}

}  // namespace hitwalk
