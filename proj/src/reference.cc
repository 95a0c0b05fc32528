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

#include "hitwalk/reference.h"

#include <cmath>
#include <limits>
#include <string>

#include "hitwalk/errors.h"
#include "hitwalk/golden.h"

namespace hitwalk::reference {

namespace {

// Error-free transformations.
inline void two_sum(double a, double b, double &s, double &e) {
    s = a + b;
    const double z = s - a;
    e = (a - (s - z)) + (b - z);
}

inline void two_product(double a, double b, double &p, double &e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

}  // namespace

template <std::size_t N>
PolynomialValue compensated_horner(const std::array<std::int64_t, N> &coeffs, double x) {
    // Coefficients are below 2^53 in magnitude and therefore exact doubles.
    double s = static_cast<double>(coeffs[N - 1]);
    double c = 0.0;
    double magnitude = std::abs(s);
    for (std::size_t k = N - 1; k-- > 0;) {
        double p, pi, sigma;
        two_product(s, x, p, pi);
        two_sum(p, static_cast<double>(coeffs[k]), s, sigma);
        c = c * x + (pi + sigma);
        magnitude = magnitude * std::abs(x) + std::abs(static_cast<double>(coeffs[k]));
    }
    const double u = std::numeric_limits<double>::epsilon() / 2.0;
    const double gamma = 2.0 * N * u / (1.0 - 2.0 * N * u);
    const double value = s + c;
    return {value, u * std::abs(value) + gamma * gamma * magnitude};
}

template PolynomialValue compensated_horner(const std::array<std::int64_t, 32> &, double);
template PolynomialValue compensated_horner(const std::array<std::int64_t, 30> &, double);

double evaluate(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p = " + std::to_string(p) + " outside [0, 1)");
    const PolynomialValue num = compensated_horner(kNumerator, p);
    const PolynomialValue den = compensated_horner(kDenominator, p);
    if (!(std::abs(den.value) > 100.0 * den.error_bound)) {
        throw PoleEncountered("Q(" + std::to_string(p) + ") = " + std::to_string(den.value) +
                              " is indistinguishable from zero");
    }
    return num.value / den.value;
}

GridMinimum argmin_on_grid(int resolution) {
    if (resolution < 100) throw InvalidArgument("resolution must be at least 100");
    const auto grid = [resolution](int k) { return static_cast<double>(k) / resolution; };
    int best = 0;
    double best_value = evaluate(0.0);
    // Points where Q cannot be certified nonzero (only next to p = 1) are skipped.
    for (int k = 1; k < resolution; ++k) {
        double v;
        try {
            v = evaluate(grid(k));
        } catch (const PoleEncountered &) {
            continue;
        }
        if (v < best_value) {
            best_value = v;
            best = k;
        }
    }
    const double lo = grid(std::max(best - 1, 0));
    const double hi = grid(std::min(best + 1, resolution - 1));
    const GoldenSectionResult refined = golden_section_minimize(evaluate, lo, hi, 1e-8);
    if (refined.fx < best_value) return {refined.x, refined.fx};
    return {grid(best), best_value};
}

}  // namespace hitwalk::reference
