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

#include "hitwalk/channels.h"

#include <cmath>

#include "hitwalk/errors.h"

namespace hitwalk {

namespace {

void require_probability(double value, const char *name, bool allow_one) {
    const bool ok = std::isfinite(value) && value >= 0.0 && (allow_one ? value <= 1.0 : value < 1.0);
    if (!ok) {
        throw InvalidChannel(std::string(name) + " = " + std::to_string(value) + " outside " +
                             (allow_one ? "[0, 1]" : "[0, 1)"));
    }
}

ComplexMatrix coin_operator(const ChainGeometry &geometry, const CoinMatrix &block) {
    const std::size_t n = geometry.dimension();
    ComplexMatrix out(n, n);
    for (std::size_t s = 0; s < geometry.site_count(); ++s) {
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) out(2 * s + r, 2 * s + c) = block(r, c);
        }
    }
    return out;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators, std::string label,
                           std::optional<ResetComponent> reset)
    : operators_(std::move(operators)), label_(std::move(label)), reset_(std::move(reset)) {
    if (operators_.empty()) throw InvalidChannel(label_ + ": no Kraus operators");
    const std::size_t n = operators_.front().rows();
    for (const auto &k : operators_) {
        if (k.rows() != n || k.cols() != n) throw InvalidChannel(label_ + ": Kraus operators must all be square " +
                                                                 std::to_string(n) + "x" + std::to_string(n));
    }
    if (reset_) {
        for (std::size_t i : reset_->operator_indices) {
            if (i >= operators_.size()) throw InvalidChannel(label_ + ": reset operator index out of range");
        }
        if (reset_->state.rows() != n || reset_->state.cols() != n) {
            throw InvalidChannel(label_ + ": reset state dimension mismatch");
        }
    }
    const double residual = completeness_residual();
    if (!(residual < 1e-10)) {
        throw InvalidChannel(label_ + ": completeness residual " + std::to_string(residual));
    }
}

DensityMatrix KrausChannel::apply(const DensityMatrix &rho) const {
    if (rho.rows() != dimension() || rho.cols() != dimension()) {
        throw DimensionMismatch(label_ + ": density matrix does not match channel dimension");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.eigen().rows(), rho.eigen().cols());
    for (const auto &k : operators_) out.noalias() += k.eigen() * rho.eigen() * k.eigen().adjoint();
    return ComplexMatrix(std::move(out));
}

double KrausChannel::completeness_residual() const {
    const auto n = static_cast<Eigen::Index>(dimension());
    Eigen::MatrixXcd sum = -Eigen::MatrixXcd::Identity(n, n);
    for (const auto &k : operators_) sum.noalias() += k.eigen().adjoint() * k.eigen();
    return sum.cwiseAbs().maxCoeff();
}

KrausChannel identity_channel(std::size_t dimension) {
    return KrausChannel({ComplexMatrix::identity(dimension)}, "identity");
}

KrausChannel unitary_channel(const ComplexMatrix &unitary) {
    if (!unitary.is_square()) throw InvalidChannel("unitary channel: operator is not square");
    const double residual = (unitary.adjoint() * unitary - ComplexMatrix::identity(unitary.rows())).max_abs();
    if (residual > 1e-10) throw InvalidChannel("unitary channel: U^dagger U - I residual " + std::to_string(residual));
    return KrausChannel({unitary}, "unitary");
}

KrausChannel unitary_channel(const WalkOperators &ops) { return unitary_channel(ops.unitary); }

KrausChannel reset_channel(const WalkOperators &ops, const ResetParams &reset) {
    require_probability(reset.p, "reset p", false);
    const std::size_t n = ops.geometry.dimension();
    const ComplexVector &psi0 = reset.reset_state.amplitudes;
    if (static_cast<std::size_t>(psi0.size()) != n) throw InvalidChannel("reset state dimension mismatch");
    if (std::abs(psi0.squaredNorm() - 1.0) > 1e-10) throw InvalidChannel("reset state is not normalized");

    std::vector<ComplexMatrix> kraus;
    kraus.reserve(n + 1);
    kraus.push_back(Complex(std::sqrt(1.0 - reset.p)) * ops.unitary);
    ResetComponent component{reset.p, reset.reset_state.density(), {}};
    const double amp = std::sqrt(reset.p);
    for (std::size_t j = 0; j < n; ++j) {
        ComplexMatrix k(n, n);
        for (std::size_t r = 0; r < n; ++r) k(r, j) = amp * psi0[static_cast<Eigen::Index>(r)];
        component.operator_indices.push_back(kraus.size());
        kraus.push_back(std::move(k));
    }
    return KrausChannel(std::move(kraus), "reset(p=" + std::to_string(reset.p) + ")", std::move(component));
}

KrausChannel bitflip_channel(const NoiseParams &noise, const ChainGeometry &geometry) {
    require_probability(noise.q, "bit-flip q", true);
    CoinMatrix flip;
    flip << 0.0, 1.0, 1.0, 0.0;
    const std::size_t n = geometry.dimension();
    return KrausChannel({Complex(std::sqrt(1.0 - noise.q)) * ComplexMatrix::identity(n),
                         Complex(std::sqrt(noise.q)) * coin_operator(geometry, flip)},
                        "bitflip(q=" + std::to_string(noise.q) + ")");
}

KrausChannel amplitude_damping_channel(double gamma, const ChainGeometry &geometry) {
    require_probability(gamma, "damping gamma", true);
    CoinMatrix keep, decay;
    keep << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma);
    decay << 0.0, std::sqrt(gamma), 0.0, 0.0;
    return KrausChannel({coin_operator(geometry, keep), coin_operator(geometry, decay)},
                        "amplitude_damping(gamma=" + std::to_string(gamma) + ")");
}

KrausChannel compose(const KrausChannel &first, const KrausChannel &second) {
    if (first.dimension() != second.dimension()) {
        throw InvalidChannel("compose: dimensions " + std::to_string(first.dimension()) + " and " +
                             std::to_string(second.dimension()));
    }
    const std::size_t n1 = first.operators().size();
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(n1 * second.operators().size());
    for (const auto &s : second.operators()) {
        for (const auto &f : first.operators()) kraus.push_back(s * f);
    }

    // A replacement stays a replacement under either composition order; with
    // two of them the structure is dropped and the generic path applies.
    std::optional<ResetComponent> reset;
    if (first.reset() && !second.reset()) {
        ResetComponent r{first.reset()->weight, second.apply(first.reset()->state), {}};
        for (std::size_t j = 0; j < second.operators().size(); ++j) {
            for (std::size_t i : first.reset()->operator_indices) r.operator_indices.push_back(j * n1 + i);
        }
        reset = std::move(r);
    } else if (second.reset() && !first.reset()) {
        ResetComponent r{second.reset()->weight, second.reset()->state, {}};
        for (std::size_t j : second.reset()->operator_indices) {
            for (std::size_t i = 0; i < n1; ++i) r.operator_indices.push_back(j * n1 + i);
        }
        reset = std::move(r);
    }
    return KrausChannel(std::move(kraus), first.label() + " then " + second.label(), std::move(reset));
}

}  // namespace hitwalk
