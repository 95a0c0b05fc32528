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

#include "hitwalk/sampling.h"

#include <cmath>
#include <string>

#include "hitwalk/errors.h"

namespace hitwalk {

MhtEstimate aggregate_detection_times(std::span<const std::uint64_t> times) {
    MhtEstimate out;
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    for (std::uint64_t t : times) {
        if (t == 0) {
            ++out.n_censored;
            continue;
        }
        ++out.n_detected;
        sum += t;
        sum_sq += static_cast<unsigned __int128>(t) * t;
    }
    if (out.censored_fraction() > 0.01) {
        throw CensoringTooHigh(std::to_string(out.n_censored) + " of " + std::to_string(times.size()) +
                               " runs exceeded max_steps");
    }
    if (out.n_detected == 0) return out;
    const auto n = static_cast<long double>(out.n_detected);
    const long double mean = static_cast<long double>(sum) / n;
    out.mean = static_cast<double>(mean);
    if (out.n_detected > 1) {
        // n * sum_sq - sum^2 is exact in 128 bits for any realistic run.
        const unsigned __int128 spread = static_cast<unsigned __int128>(out.n_detected) * sum_sq - sum * sum;
        const long double variance = static_cast<long double>(spread) / (n * (n - 1));
        out.standard_error = static_cast<double>(std::sqrt(variance / n));
    }
    return out;
}

}  // namespace hitwalk
