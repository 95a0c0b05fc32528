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

#ifndef HITWALK_REFERENCE_H
#define HITWALK_REFERENCE_H

// Closed-form MHT(p) = P(p) / Q(p) for the reset walk with targets at -5 and
// +5, start 0, initial state |x=0, +1>. Integer coefficients, degree 31 over
// degree 29.

#include <array>
#include <cstdint>

namespace hitwalk::reference {

inline constexpr std::array<std::int64_t, 32> kNumerator = {
    25,          680,         3182,        -16076,      41900,       188272,      -2365266,   13199288,
    -52780841,   168369748,   -448139860,  1019082020,  -2007144828, 3450802448,  -5199757900, 6877143700,
    -7981402521, 8115959704,  -7212800234, 5583320608,  -3748159536, 2170309920,  -1076624642, 453683956,
    -160649327,  47130156,    -11239984,   2122056,     -304968,     31328,       -2048,       64,
};

inline constexpr std::array<std::int64_t, 30> kDenominator = {
    1,          35,        122,        -1918,     5444,       19864,     -277774,    1586138,
    -6286809,   19419993,  -49059564,  103784468, -186111868, 284770388, -373154260, 419592924,
    -405209569, 336023109, -238989182, 145441050, -75450536,  33180052,  -12269534,  3771338,
    -947615,    189911,    -29232,     3248,      -232,       8,
};

inline constexpr int kTargetHalfwidth = 5;

/// Compensated Horner value of a polynomial with an a-priori error bound.
struct PolynomialValue {
    double value = 0.0;
    double error_bound = 0.0;
};

template <std::size_t N>
PolynomialValue compensated_horner(const std::array<std::int64_t, N> &coeffs, double x);

/// MHT(p). Throws InvalidArgument outside [0, 1] and PoleEncountered where
/// |Q(p)| is not certified nonzero (|Q| <= 100x its error bound); p = 1 is a pole.
double evaluate(double p);

struct GridMinimum {
    double p_star = 0.0;
    double mht_star = 0.0;
};

/// Coarse scan of p = k / resolution, k = 0..resolution-1, then golden-section
/// refinement around the best point to |dp| < 1e-8. Throws InvalidArgument
/// for resolution < 100.
GridMinimum argmin_on_grid(int resolution = 1000);

}  // namespace hitwalk::reference

#endif  // HITWALK_REFERENCE_H
