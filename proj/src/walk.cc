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

#include "hitwalk/walk.h"

#include <cassert>
#include <cmath>
#include <string>

#include "hitwalk/errors.h"

namespace hitwalk {

ChainGeometry ChainGeometry::build(int x_start, int x_left, int x_right) {
    if (!(x_left < x_start && x_start < x_right)) {
        throw InvalidGeometry("need x_left < x_start < x_right, got start=" + std::to_string(x_start) +
                              " targets=(" + std::to_string(x_left) + ", " + std::to_string(x_right) + ")");
    }
    return ChainGeometry(x_start, x_left, x_right);
}

std::vector<int> ChainGeometry::sites() const {
    std::vector<int> out;
    out.reserve(site_count());
    for (int x = x_left_; x <= x_right_; ++x) out.push_back(x);
    return out;
}

std::size_t ChainGeometry::index(int position, Coin coin) const {
    if (!contains(position)) throw InvalidArgument("position " + std::to_string(position) + " is off the chain");
    return 2 * static_cast<std::size_t>(position - x_left_) + (coin == Coin::plus ? 0 : 1);
}

BasisIndex ChainGeometry::basis(std::size_t flat) const {
    if (flat >= dimension()) throw InvalidArgument("basis index " + std::to_string(flat) + " out of range");
    return {x_left_ + static_cast<int>(flat / 2), flat % 2 == 0 ? Coin::plus : Coin::minus};
}

CoinMatrix hadamard_like_coin() {
    const double s = 1.0 / std::sqrt(2.0);
    CoinMatrix c;
    c << s, -s, s, s;
    return c;
}

void validate_coin_unitary(const CoinMatrix &c) {
    if (!c.allFinite()) throw InvalidCoin("coin matrix has non-finite entries");
    const double residual = (c.adjoint() * c - CoinMatrix::Identity()).cwiseAbs().maxCoeff();
    if (residual > 1e-10) throw InvalidCoin("coin matrix is not unitary (residual " + std::to_string(residual) + ")");
}

CoinSpec CoinSpec::plus() { return CoinSpec({1.0, 0.0}, {0.0, 0.0}); }

CoinSpec CoinSpec::symmetric() {
    const double s = 1.0 / std::sqrt(2.0);
    return CoinSpec({s, 0.0}, {0.0, s});
}

CoinSpec CoinSpec::explicit_coin(Complex up, Complex down) {
    const double norm = std::norm(up) + std::norm(down);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-10) {
        throw InvalidCoin("coin (a, b) must satisfy |a|^2 + |b|^2 = 1, got " + std::to_string(norm));
    }
    return CoinSpec(up, down);
}

WalkOperators build_operators(const ChainGeometry &geometry, const CoinMatrix &coin) {
    validate_coin_unitary(coin);
    const std::size_t n = geometry.dimension();
    const int left = geometry.x_left();
    const int sites = static_cast<int>(geometry.site_count());
    auto wrap = [&](int x) { return left + ((x - left) % sites + sites) % sites; };

    ComplexMatrix step(n, n);
    ComplexMatrix coin_full(n, n);
    ComplexMatrix projector(n, n);
    for (int x : geometry.sites()) {
        const std::size_t up = geometry.index(x, Coin::plus);
        const std::size_t down = geometry.index(x, Coin::minus);
        step(geometry.index(wrap(x + 1), Coin::plus), up) = 1.0;
        step(geometry.index(wrap(x - 1), Coin::minus), down) = 1.0;
        coin_full(up, up) = coin(0, 0);
        coin_full(up, down) = coin(0, 1);
        coin_full(down, up) = coin(1, 0);
        coin_full(down, down) = coin(1, 1);
        if (geometry.is_target(x)) {
            projector(up, up) = 1.0;
            projector(down, down) = 1.0;
        }
    }
    ComplexMatrix unitary = step * coin_full;
    ComplexMatrix survivor = ComplexMatrix::identity(n) - projector;
    return {geometry, coin, std::move(step), std::move(coin_full), std::move(unitary), std::move(projector),
            std::move(survivor)};
}

WalkState initial_state(const ChainGeometry &geometry, const CoinSpec &coin) {
    ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(geometry.dimension()));
    psi[static_cast<Eigen::Index>(geometry.index(geometry.x_start(), Coin::plus))] = coin.up();
    psi[static_cast<Eigen::Index>(geometry.index(geometry.x_start(), Coin::minus))] = coin.down();
    return {std::move(psi)};
}

void apply_unitary(ComplexVector &psi, const ChainGeometry &geometry, const CoinMatrix &coin) {
    const Eigen::Index sites = static_cast<Eigen::Index>(geometry.site_count());
    assert(psi.size() == 2 * sites);
    ComplexVector out(psi.size());
    for (Eigen::Index s = 0; s < sites; ++s) {
        const Complex a = psi[2 * s];
        const Complex b = psi[2 * s + 1];
        out[2 * ((s + 1) % sites)] = coin(0, 0) * a + coin(0, 1) * b;
        out[2 * ((s + sites - 1) % sites) + 1] = coin(1, 0) * a + coin(1, 1) * b;
    }
    psi.swap(out);
}

void apply_coin_flip(ComplexVector &psi) {
    for (Eigen::Index i = 0; i + 1 < psi.size(); i += 2) std::swap(psi[i], psi[i + 1]);
}

double remove_target_amplitude(ComplexVector &psi, const ChainGeometry &geometry) {
    double removed = 0.0;
    for (int x : {geometry.x_left(), geometry.x_right()}) {
        for (Coin c : {Coin::plus, Coin::minus}) {
            Complex &amp = psi[static_cast<Eigen::Index>(geometry.index(x, c))];
            removed += std::norm(amp);
            amp = 0.0;
        }
    }
    return removed;
}

double wrap_amplitude(const ComplexVector &psi, const ChainGeometry &geometry) {
    // The coin mixes both components of a site, so any weight on a target
    // site can reach the seam on the next step.
    double w = 0.0;
    for (int x : {geometry.x_left(), geometry.x_right()}) {
        for (Coin c : {Coin::plus, Coin::minus}) w += std::norm(psi[static_cast<Eigen::Index>(geometry.index(x, c))]);
    }
    return w;
}

ConditionedStep conditioned_step(const WalkState &state, const WalkOperators &ops) {
    const ChainGeometry &g = ops.geometry;
    if (static_cast<std::size_t>(state.amplitudes.size()) != g.dimension()) {
        throw DimensionMismatch("state length " + std::to_string(state.amplitudes.size()) + " for dimension " +
                                std::to_string(g.dimension()));
    }
    ComplexVector psi = state.amplitudes;
    apply_unitary(psi, g, ops.coin_block);
    const double detected = remove_target_amplitude(psi, g);
    assert(wrap_amplitude(psi, g) < 1e-28);
    return {WalkState{std::move(psi)}, detected};
}

}  // namespace hitwalk
