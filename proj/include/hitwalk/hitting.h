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

#ifndef HITWALK_HITTING_H
#define HITWALK_HITTING_H

// Mean hitting time of a measured walk driven by an arbitrary Kraus channel.
//
// Per step the channel acts, then the detectors measure: B rho collects the
// detected part, M rho the surviving part. With rho0 the initial state,
//     p(t) = Tr(B M^{t-1} rho0),   MHT = sum_t t p(t) = Tr(B (I - M)^{-2} rho0).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hitwalk/channels.h"
#include "hitwalk/numerics.h"
#include "hitwalk/walk.h"

namespace hitwalk {

enum class MhtMethod { resolvent, series, monte_carlo };

std::string to_string(MhtMethod method);

struct HittingSuperoperators {
    std::size_t dimension = 0;  // N; the superoperators are N^2 x N^2
    ComplexMatrix b_matrix;     // sum_i conj(P K_i) (x) P K_i
    ComplexMatrix m_matrix;     // sum_i conj(W K_i) (x) W K_i

    // Present when the channel carries a reset component of positive weight:
    // M = m_coherent + vec(reset_survivor) vec(I)^dagger, and likewise for B.
    struct ResetSplit {
        double weight = 0.0;
        ComplexMatrix b_coherent;
        ComplexMatrix m_coherent;
        DensityMatrix reset_detected;  // weight * P sigma P
        DensityMatrix reset_survivor;  // weight * W sigma W
        std::vector<ComplexMatrix> survivor_kraus;  // W K_i over the coherent operators
        ComplexMatrix detection_effect;             // sum over coherent K_i^dagger P K_i
    };
    std::optional<ResetSplit> reset_split;
};

/// Throws DimensionMismatch if channel and operators disagree on N.
HittingSuperoperators build_superoperators(const KrausChannel &channel, const WalkOperators &ops);

struct HittingDiagnostics {
    std::optional<double> condition_estimate;
    std::optional<std::size_t> horizon;
    std::optional<double> tail_correction;
    std::optional<double> standard_error;
};

struct HittingResult {
    double mht = 0.0;
    MhtMethod method = MhtMethod::resolvent;
    HittingDiagnostics diagnostics;
};

enum class ResolventRoute {
    automatic,  // rank-one reset update when available, plain LU otherwise
    plain,      // two solves against LU(I - M)
};

/// Throws InfiniteMHT when I - M is singular, or when the imaginary residue of
/// the trace exceeds 1e-8 * max(1, |MHT|) (then the error names the residue).
HittingResult mht_resolvent(const HittingSuperoperators &supers, const DensityMatrix &rho0,
                            ResolventRoute route = ResolventRoute::automatic);

/// Truncated series sum_t t p(t); stops once survival < tail_epsilon and adds
/// a geometric tail from the last survival ratio. Throws NonConvergent past
/// max_steps, InvalidArgument for tail_epsilon <= 0.
HittingResult mht_series(const HittingSuperoperators &supers, const DensityMatrix &rho0,
                         double tail_epsilon = 1e-10, std::size_t max_steps = 10'000'000);
HittingResult mht_series(const KrausChannel &channel, const WalkOperators &ops, const DensityMatrix &rho0,
                         double tail_epsilon = 1e-10);

/// p(t) for t = 1..steps and survival Tr rho(t) for t = 0..steps.
struct DetectionProfile {
    std::vector<double> detection;
    std::vector<double> survival;
};
DetectionProfile detection_profile(const HittingSuperoperators &supers, const DensityMatrix &rho0, std::size_t steps);

/// The measured walk with stochastic reset to the initial state and coin
/// bit-flip noise applied after the walk/reset step.
struct WalkSetup {
    ChainGeometry geometry;
    CoinSpec coin = CoinSpec::plus();
    double reset_p = 0.0;
    double noise_q = 0.0;
};

KrausChannel walk_channel(const WalkSetup &setup, const WalkOperators &ops);
HittingSuperoperators walk_superoperators(const WalkSetup &setup);
DensityMatrix walk_initial_density(const WalkSetup &setup);

/// Resolvent MHT of a WalkSetup.
double quantum_mht(const WalkSetup &setup);

struct EmbeddingComparison {
    double quantum_mht = 0.0;
    double classical_mht = 0.0;
    double difference = 0.0;  // quantum - classical
};

/// Quantum MHT under reset p and bit-flip q against the classical walk with
/// the same reset; q = 1/2 fully randomizes the coin.
EmbeddingComparison classical_embedding_check(const ChainGeometry &geometry, double reset_p, double noise_q = 0.5);

}  // namespace hitwalk

#endif  // HITWALK_HITTING_H
