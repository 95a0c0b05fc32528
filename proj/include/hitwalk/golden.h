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

#ifndef HITWALK_GOLDEN_H
#define HITWALK_GOLDEN_H

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace hitwalk {

struct GoldenSectionResult {
    double x = 0.0;
    double fx = 0.0;
    std::vector<std::pair<double, double>> evaluations;  // every (x, f(x)) in call order
};

/// Golden-section search for a minimum of f on [lo, hi], stopping once the
/// bracket is narrower than tolerance. Returns the best evaluated point.
inline GoldenSectionResult golden_section_minimize(const std::function<double(double)> &f, double lo, double hi,
                                                   double tolerance) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    GoldenSectionResult out;
    auto eval = [&](double x) {
        const double fx = f(x);
        out.evaluations.emplace_back(x, fx);
        if (out.evaluations.size() == 1 || fx < out.fx) {
            out.x = x;
            out.fx = fx;
        }
        return fx;
    };
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (b - a > tolerance) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d);
        }
    }
    return out;
}

}  // namespace hitwalk

#endif  // HITWALK_GOLDEN_H
