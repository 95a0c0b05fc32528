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

#include "hitwalk/hitting.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "hitwalk/classical.h"
#include "hitwalk/errors.h"

namespace hitwalk {

namespace {

// acc += conj(a) (x) a
void add_superoperator(Eigen::MatrixXcd &acc, const Eigen::MatrixXcd &a) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const Complex c = std::conj(a(i, j));
            if (c == Complex(0.0, 0.0)) continue;
            acc.block(i * n, j * n, n, n) += c * a;
        }
    }
}

// vec(I)^dagger * m as a row: Tr(devec(m x)) = trace_row . x
Eigen::RowVectorXcd trace_row(const ComplexMatrix &m, std::size_t n) {
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(m.eigen().cols());
    for (std::size_t i = 0; i < n; ++i) row += m.eigen().row(static_cast<Eigen::Index>(i * (n + 1)));
    return row;
}

Complex vec_identity_dot(const ComplexVector &x, std::size_t n) { return vec_trace(x, n); }

double checked_real(Complex value, const char *what) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw InfiniteMHT(std::string(what) + " is not finite");
    }
    if (std::abs(value.imag()) > 1e-8 * std::max(1.0, std::abs(value.real()))) {
        throw InfiniteMHT(std::string(what) + " has imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

HittingResult plain_resolvent(const HittingSuperoperators &supers, const ComplexVector &rho0) {
    const std::size_t n = supers.dimension;
    const auto big = static_cast<Eigen::Index>(n * n);
    ComplexMatrix i_minus_m(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(big, big) - supers.m_matrix.eigen()));
    std::optional<LUFactorization> lu;
    try {
        lu.emplace(i_minus_m);
    } catch (const SingularMatrix &e) {
        throw InfiniteMHT(std::string("I - M is singular; the walker is never detected (") + e.what() + ")");
    }
    const ComplexVector y = lu->solve(rho0);
    const ComplexVector z = lu->solve(y);
    const double mht = checked_real(vec_trace(supers.b_matrix * z, n), "resolvent MHT");
    HittingResult result{mht, MhtMethod::resolvent, {}};
    result.diagnostics.condition_estimate = lu->condition_estimate();
    return result;
}

// I - M = A - u 1^dagger with A = I - M_coherent. Sherman-Morrison:
//   (I - M)^{-1} x = A^{-1} x + A^{-1} u (1^dagger A^{-1} x) / d,  d = 1 - 1^dagger A^{-1} u.
// Trace preservation gives 1^dagger A = 1^dagger B_coherent + c 1^dagger with
// c = Tr(reset_detected + reset_survivor), hence
//   d = (Tr(reset_detected) + 1^dagger B_coherent A^{-1} u) / c,
// a sum of nonnegative terms that stays accurate as p -> 1.
HittingResult split_resolvent(const HittingSuperoperators &supers, const ComplexVector &rho0) {
    const auto &split = *supers.reset_split;
    const std::size_t n = supers.dimension;
    const auto big = static_cast<Eigen::Index>(n * n);
    ComplexMatrix a(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(big, big) - split.m_coherent.eigen()));
    std::optional<LUFactorization> lu;
    try {
        lu.emplace(a);
    } catch (const SingularMatrix &e) {
        throw InfiniteMHT(std::string("I - M_coherent is singular (") + e.what() + ")");
    }
    const ComplexVector u = vectorize(split.reset_survivor);
    const Eigen::RowVectorXcd b_trace = trace_row(split.b_coherent, n);
    const Complex detected_by_reset = split.reset_detected.trace();
    const Complex c = detected_by_reset + split.reset_survivor.trace();
    const ComplexVector a_inv_u = lu->solve(u);
    const Complex d = (detected_by_reset + (b_trace * a_inv_u)(0)) / c;
    if (!(std::abs(d) > 0.0) || !std::isfinite(std::abs(d))) {
        throw InfiniteMHT("reset loop never reaches the detectors");
    }
    auto resolve = [&](const ComplexVector &x) {
        ComplexVector ax = lu->solve(x);
        const Complex weight = vec_identity_dot(ax, n) / d;
        ax += weight * a_inv_u;
        return ax;
    };
    const ComplexVector y = resolve(rho0);
    const ComplexVector z = resolve(y);
    const Complex mht = (b_trace * z)(0) + detected_by_reset * vec_identity_dot(z, n);
    HittingResult result{checked_real(mht, "resolvent MHT"), MhtMethod::resolvent, {}};
    result.diagnostics.condition_estimate = lu->condition_estimate();
    return result;
}

ComplexVector checked_initial(const HittingSuperoperators &supers, const DensityMatrix &rho0) {
    if (rho0.rows() != supers.dimension || rho0.cols() != supers.dimension) {
        throw DimensionMismatch("initial density matrix is " + std::to_string(rho0.rows()) + "x" +
                                std::to_string(rho0.cols()) + ", expected dimension " +
                                std::to_string(supers.dimension));
    }
    return vectorize(rho0);
}

// One application of M and the detection probability Tr(B rho) it removes.
class SurvivorStepper {
   public:
    explicit SurvivorStepper(const HittingSuperoperators &supers) : supers_(supers) {
        if (!supers.reset_split) detect_row_ = trace_row(supers.b_matrix, supers.dimension);
    }

    // Returns p = Tr(B rho) and replaces rho by M rho.
    double step(Eigen::MatrixXcd &rho) const {
        const auto n = static_cast<Eigen::Index>(supers_.dimension);
        if (supers_.reset_split) {
            const auto &split = *supers_.reset_split;
            const Complex trace = rho.trace();
            const double detected =
                (split.detection_effect.eigen().cwiseProduct(rho.transpose())).sum().real() +
                trace.real() * split.reset_detected.trace().real();
            Eigen::MatrixXcd next = trace * split.reset_survivor.eigen();
            for (const auto &k : split.survivor_kraus) next.noalias() += k.eigen() * rho * k.eigen().adjoint();
            rho.swap(next);
            return detected;
        }
        const Eigen::Map<const ComplexVector> v(rho.data(), n * n);
        const double detected = (detect_row_ * v)(0).real();
        ComplexVector next = supers_.m_matrix.eigen() * v;
        rho = Eigen::Map<Eigen::MatrixXcd>(next.data(), n, n);
        return detected;
    }

   private:
    const HittingSuperoperators &supers_;
    Eigen::RowVectorXcd detect_row_;
};

}  // namespace

std::string to_string(MhtMethod method) {
    switch (method) {
        case MhtMethod::resolvent:
            return "resolvent";
        case MhtMethod::series:
            return "series";
        case MhtMethod::monte_carlo:
            return "mc";
    }
    return "unknown";
}

HittingSuperoperators build_superoperators(const KrausChannel &channel, const WalkOperators &ops) {
    const std::size_t n = ops.geometry.dimension();
    if (channel.dimension() != n) {
        throw DimensionMismatch("channel dimension " + std::to_string(channel.dimension()) +
                                " does not match walk dimension " + std::to_string(n));
    }
    const auto big = static_cast<Eigen::Index>(n * n);
    const Eigen::MatrixXcd &p = ops.projector.eigen();
    const Eigen::MatrixXcd &w = ops.survivor.eigen();

    std::unordered_set<std::size_t> reset_ops;
    const bool split = channel.reset() && channel.reset()->weight > 0.0;
    if (split) reset_ops.insert(channel.reset()->operator_indices.begin(), channel.reset()->operator_indices.end());

    Eigen::MatrixXcd b_coh = Eigen::MatrixXcd::Zero(big, big);
    Eigen::MatrixXcd m_coh = Eigen::MatrixXcd::Zero(big, big);
    Eigen::MatrixXcd b_rest = Eigen::MatrixXcd::Zero(big, big);
    Eigen::MatrixXcd m_rest = Eigen::MatrixXcd::Zero(big, big);
    HittingSuperoperators::ResetSplit parts;
    Eigen::MatrixXcd effect = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < channel.operators().size(); ++i) {
        const Eigen::MatrixXcd &k = channel.operators()[i].eigen();
        const Eigen::MatrixXcd pk = p * k;
        const Eigen::MatrixXcd wk = w * k;
        const bool coherent = !reset_ops.contains(i);
        add_superoperator(coherent ? b_coh : b_rest, pk);
        add_superoperator(coherent ? m_coh : m_rest, wk);
        if (split && coherent) {
            parts.survivor_kraus.emplace_back(wk);
            effect.noalias() += pk.adjoint() * pk;
        }
    }

    HittingSuperoperators out;
    out.dimension = n;
    out.b_matrix = ComplexMatrix(Eigen::MatrixXcd(b_coh + b_rest));
    out.m_matrix = ComplexMatrix(Eigen::MatrixXcd(m_coh + m_rest));
    if (split) {
        const ResetComponent &reset = *channel.reset();
        parts.weight = reset.weight;
        parts.b_coherent = ComplexMatrix(std::move(b_coh));
        parts.m_coherent = ComplexMatrix(std::move(m_coh));
        parts.reset_detected = Complex(reset.weight) * (ops.projector * reset.state * ops.projector.adjoint());
        parts.reset_survivor = Complex(reset.weight) * (ops.survivor * reset.state * ops.survivor.adjoint());
        parts.detection_effect = ComplexMatrix(std::move(effect));
        out.reset_split = std::move(parts);
    }
    return out;
}

HittingResult mht_resolvent(const HittingSuperoperators &supers, const DensityMatrix &rho0, ResolventRoute route) {
    const ComplexVector v = checked_initial(supers, rho0);
    if (route == ResolventRoute::automatic && supers.reset_split) return split_resolvent(supers, v);
    return plain_resolvent(supers, v);
}

HittingResult mht_series(const HittingSuperoperators &supers, const DensityMatrix &rho0, double tail_epsilon,
                         std::size_t max_steps) {
    if (!(tail_epsilon > 0.0)) throw InvalidArgument("tail_epsilon must be positive");
    checked_initial(supers, rho0);
    const SurvivorStepper stepper(supers);
    Eigen::MatrixXcd rho = rho0.eigen();
    double previous_survival = rho.trace().real();
    double survival = previous_survival;
    double sum = 0.0;
    std::size_t t = 0;
    while (survival >= tail_epsilon) {
        if (t >= max_steps) {
            throw NonConvergent("survival " + std::to_string(survival) + " after " + std::to_string(t) +
                                " steps exceeds tail_epsilon");
        }
        ++t;
        const double detected = stepper.step(rho);
        sum += static_cast<double>(t) * detected;
        previous_survival = survival;
        survival = rho.trace().real();
    }
    // S(t') ~ S(T) r^{t'-T} beyond the horizon:
    //   sum_{t' > T} t' p(t') = S(T) ((T + 1) + r / (1 - r)).
    double tail = 0.0;
    if (survival > 0.0 && previous_survival > 0.0) {
        const double ratio = std::clamp(survival / previous_survival, 0.0, 1.0 - 1e-15);
        tail = survival * (static_cast<double>(t + 1) + ratio / (1.0 - ratio));
    }
    HittingResult result{sum + tail, MhtMethod::series, {}};
    result.diagnostics.horizon = t;
    result.diagnostics.tail_correction = tail;
    return result;
}

HittingResult mht_series(const KrausChannel &channel, const WalkOperators &ops, const DensityMatrix &rho0,
                         double tail_epsilon) {
    return mht_series(build_superoperators(channel, ops), rho0, tail_epsilon);
}

DetectionProfile detection_profile(const HittingSuperoperators &supers, const DensityMatrix &rho0,
                                   std::size_t steps) {
    checked_initial(supers, rho0);
    const SurvivorStepper stepper(supers);
    Eigen::MatrixXcd rho = rho0.eigen();
    DetectionProfile out;
    out.detection.reserve(steps);
    out.survival.reserve(steps + 1);
    out.survival.push_back(rho.trace().real());
    for (std::size_t t = 1; t <= steps; ++t) {
        out.detection.push_back(stepper.step(rho));
        out.survival.push_back(rho.trace().real());
    }
    return out;
}

KrausChannel walk_channel(const WalkSetup &setup, const WalkOperators &ops) {
    KrausChannel walk = reset_channel(ops, {setup.reset_p, initial_state(setup.geometry, setup.coin)});
    if (setup.noise_q == 0.0) return walk;
    return compose(walk, bitflip_channel({setup.noise_q}, setup.geometry));
}

HittingSuperoperators walk_superoperators(const WalkSetup &setup) {
    const WalkOperators ops = build_operators(setup.geometry);
    return build_superoperators(walk_channel(setup, ops), ops);
}

DensityMatrix walk_initial_density(const WalkSetup &setup) {
    return initial_state(setup.geometry, setup.coin).density();
}

double quantum_mht(const WalkSetup &setup) {
    return mht_resolvent(walk_superoperators(setup), walk_initial_density(setup)).mht;
}

EmbeddingComparison classical_embedding_check(const ChainGeometry &geometry, double reset_p, double noise_q) {
    if (!geometry.symmetric()) throw InvalidGeometry("classical embedding check needs a symmetric start");
    EmbeddingComparison out;
    out.quantum_mht = quantum_mht({geometry, CoinSpec::plus(), reset_p, noise_q});
    out.classical_mht = mht_with_reset({geometry, reset_p});
    out.difference = out.quantum_mht - out.classical_mht;
    return out;
}

}  // namespace hitwalk
