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

#ifndef HITWALK_SAMPLING_H
#define HITWALK_SAMPLING_H

// Seeded random streams and aggregation of Monte Carlo detection times.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace hitwalk {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent generator for (seed, stream index); lets parallel runs
/// reproduce serial ones exactly.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

/// Uniform in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct MhtEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::size_t n_detected = 0;
    std::size_t n_censored = 0;

    double censored_fraction() const {
        const std::size_t n = n_detected + n_censored;
        return n == 0 ? 0.0 : static_cast<double>(n_censored) / static_cast<double>(n);
    }
};

/// Detection time 0 marks a censored run. Sums are exact integers so the
/// result does not depend on evaluation order. Throws CensoringTooHigh when
/// more than 1% of runs are censored.
MhtEstimate aggregate_detection_times(std::span<const std::uint64_t> times);

}  // namespace hitwalk

#endif  // HITWALK_SAMPLING_H
