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

#include <algorithm>
#include <string>

#include "hitwalk/errors.h"
#include "hitwalk/golden.h"
#include "hitwalk/hitting.h"
#include "hitwalk/parallel.h"

namespace hitwalk {

OptimizationReport minimize_mht(const ChainGeometry &geometry, const CoinSpec &coin, double noise_q,
                                std::size_t grid_resolution) {
    if (!(noise_q >= 0.0 && noise_q <= 1.0)) throw InvalidArgument("noise q outside [0, 1]");
    if (grid_resolution < 2) throw InvalidArgument("grid_resolution must be at least 2");
    constexpr double kUpper = 0.99;
    const auto mht_at = [&](double p) { return quantum_mht({geometry, coin, p, noise_q}); };

    OptimizationReport report;
    report.scan.resize(grid_resolution + 1);
    parallel_for(grid_resolution + 1, [&](std::size_t k) {
        const double p = kUpper * static_cast<double>(k) / static_cast<double>(grid_resolution);
        report.scan[k] = {p, mht_at(p)};
    });
    const auto best = std::min_element(report.scan.begin(), report.scan.end(),
                                       [](const auto &a, const auto &b) { return a.second < b.second; });
    const std::size_t k = static_cast<std::size_t>(best - report.scan.begin());
    report.p_star = best->first;
    report.mht_star = best->second;

    const double lo = report.scan[k == 0 ? 0 : k - 1].first;
    const double hi = report.scan[std::min(k + 1, grid_resolution)].first;
    const GoldenSectionResult refined = golden_section_minimize(mht_at, lo, hi, 1e-6);
    report.refinement = refined.evaluations;
    if (refined.fx < report.mht_star) {
        report.p_star = refined.x;
        report.mht_star = refined.fx;
    }
    report.evaluations = report.scan.size() + report.refinement.size();
    return report;
}

}  // namespace hitwalk
