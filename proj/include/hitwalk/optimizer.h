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

#ifndef HITWALK_OPTIMIZER_H
#define HITWALK_OPTIMIZER_H

#include <cstddef>
#include <utility>
#include <vector>

#include "hitwalk/walk.h"

namespace hitwalk {

struct OptimizationReport {
    double p_star = 0.0;
    double mht_star = 0.0;
    std::size_t evaluations = 0;
    std::vector<std::pair<double, double>> scan;        // coarse grid (p, MHT)
    std::vector<std::pair<double, double>> refinement;  // golden-section (p, MHT)
};

/// Reset probability minimizing the resolvent MHT with bit-flip noise q.
/// Scans grid_resolution + 1 equally spaced points on [0, 0.99], then refines
/// the bracket around the best one by golden section to |dp| < 1e-6. MHT(p)
/// is not assumed unimodal; the full scan is kept in the report.
/// Throws InvalidArgument for q outside [0, 1] or grid_resolution < 2, and
/// propagates InfiniteMHT.
OptimizationReport minimize_mht(const ChainGeometry &geometry, const CoinSpec &coin, double noise_q,
                                std::size_t grid_resolution = 99);

}  // namespace hitwalk

#endif  // HITWALK_OPTIMIZER_H
