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

#ifndef HITWALK_CHANNELS_H
#define HITWALK_CHANNELS_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hitwalk/numerics.h"
#include "hitwalk/walk.h"

namespace hitwalk {

/// Marks the Kraus operators of a channel that together act as
/// rho -> weight * Tr(rho) * state. The hitting engine uses this to treat the
/// reset contribution as a rank-one update.
struct ResetComponent {
    double weight = 0.0;
    DensityMatrix state;
    std::vector<std::size_t> operator_indices;
};

class KrausChannel {
   public:
    /// Throws InvalidChannel on empty/non-square/mismatched operators or when
    /// ||sum K^dagger K - I||_inf >= 1e-10.
    KrausChannel(std::vector<ComplexMatrix> operators, std::string label,
                 std::optional<ResetComponent> reset = std::nullopt);

    const std::vector<ComplexMatrix> &operators() const { return operators_; }
    const std::string &label() const { return label_; }
    std::size_t dimension() const { return operators_.front().rows(); }
    const std::optional<ResetComponent> &reset() const { return reset_; }

    DensityMatrix apply(const DensityMatrix &rho) const;
    double completeness_residual() const;

   private:
    std::vector<ComplexMatrix> operators_;
    std::string label_;
    std::optional<ResetComponent> reset_;
};

struct ResetParams {
    double p = 0.0;
    WalkState reset_state;
};

struct NoiseParams {
    double q = 0.0;
};

KrausChannel identity_channel(std::size_t dimension);

/// Single-operator channel {U}. Throws InvalidChannel if U is not unitary.
KrausChannel unitary_channel(const ComplexMatrix &unitary);
KrausChannel unitary_channel(const WalkOperators &ops);

/// {sqrt(1-p) U} together with sqrt(p)|psi0><j| for every basis index j.
/// Throws InvalidChannel unless 0 <= p < 1 and psi0 is normalized.
KrausChannel reset_channel(const WalkOperators &ops, const ResetParams &reset);

/// {sqrt(1-q) I, sqrt(q) I_x (x) sigma_x}. Throws InvalidChannel unless 0 <= q <= 1.
KrausChannel bitflip_channel(const NoiseParams &noise, const ChainGeometry &geometry);

/// Amplitude damping of the coin at every site; coin -1 decays to +1 with
/// probability gamma.
KrausChannel amplitude_damping_channel(double gamma, const ChainGeometry &geometry);

/// Channel rho -> second(first(rho)), operators {S_j F_i} ordered j-major.
KrausChannel compose(const KrausChannel &first, const KrausChannel &second);

}  // namespace hitwalk

#endif  // HITWALK_CHANNELS_H
