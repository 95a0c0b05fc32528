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

#include "hitwalk/spread.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hitwalk/errors.h"

namespace hitwalk {

namespace {

ChainGeometry lattice(std::size_t halfwidth) {
    const int h = static_cast<int>(halfwidth);
    return ChainGeometry::build(0, -h, h);
}

std::vector<int> lattice_positions(std::size_t halfwidth) {
    std::vector<int> xs;
    const int h = static_cast<int>(halfwidth);
    for (int x = -h; x <= h; ++x) xs.push_back(x);
    return xs;
}

void check_edges(const std::vector<double> &prob, std::size_t required, std::size_t t) {
    if (prob.front() > 1e-12 || prob.back() > 1e-12) {
        throw LatticeTooSmall("probability reached the lattice edge at t = " + std::to_string(t) +
                              "; required halfwidth " + std::to_string(required));
    }
}

}  // namespace

std::size_t SpreadConfig::required_halfwidth() const {
    return steps + static_cast<std::size_t>(std::ceil(6.0 * sigma)) + 2;
}

WalkState gaussian_initial_state(double sigma, const CoinSpec &coin, std::size_t lattice_halfwidth) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw InvalidArgument("sigma must be nonnegative");
    if (6.0 * sigma > static_cast<double>(lattice_halfwidth)) {
        throw InvalidArgument("6 sigma exceeds the lattice halfwidth");
    }
    const ChainGeometry g = lattice(std::max<std::size_t>(lattice_halfwidth, 1));
    ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(g.dimension()));
    double norm_sq = 0.0;
    for (int x : g.sites()) {
        double profile = 0.0;
        if (sigma == 0.0) {
            profile = x == 0 ? 1.0 : 0.0;
        } else if (std::abs(x) <= 6.0 * sigma) {
            const double z = x / (2.0 * sigma);
            profile = std::exp(-z * z);
        }
        psi[static_cast<Eigen::Index>(g.index(x, Coin::plus))] = profile * coin.up();
        psi[static_cast<Eigen::Index>(g.index(x, Coin::minus))] = profile * coin.down();
        norm_sq += profile * profile;
    }
    psi /= std::sqrt(norm_sq);
    return {std::move(psi)};
}

double position_variance(const std::vector<int> &positions, const std::vector<double> &probability) {
    double mean = 0.0, second = 0.0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const double x = positions[i];
        mean += x * probability[i];
        second += x * x * probability[i];
    }
    return second - mean * mean;
}

std::optional<double> fit_power_law(const std::vector<double> &y, std::size_t begin, std::size_t end) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t n = 0;
    for (std::size_t t = std::max<std::size_t>(begin, 1); t <= end && t < y.size(); ++t) {
        if (!(y[t] > 0.0)) continue;
        const double lx = std::log(static_cast<double>(t));
        const double ly = std::log(y[t]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return std::nullopt;
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    if (denom == 0.0) return std::nullopt;
    return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

SpreadResult evolve_distribution(const SpreadConfig &config) {
    const std::size_t required = config.required_halfwidth();
    const std::size_t halfwidth = config.lattice_halfwidth == 0 ? required : config.lattice_halfwidth;
    if (halfwidth < required) {
        throw LatticeTooSmall("lattice halfwidth " + std::to_string(halfwidth) + " is below the required " +
                              std::to_string(required));
    }
    const ChainGeometry g = lattice(halfwidth);
    const std::vector<int> xs = lattice_positions(halfwidth);
    const std::size_t sites = xs.size();

    SpreadResult result;
    result.msd.reserve(config.steps + 1);
    auto snapshot_wanted = [&](std::size_t t) {
        return std::find(config.distributions_at.begin(), config.distributions_at.end(), t) !=
               config.distributions_at.end();
    };
    auto record = [&](std::size_t t, const std::vector<double> &prob) {
        check_edges(prob, required, t);
        result.msd.push_back(position_variance(xs, prob));
        if (snapshot_wanted(t)) result.distributions.push_back({t, xs, prob});
    };

    const WalkState start = gaussian_initial_state(config.sigma, config.coin, halfwidth);
    std::vector<double> prob(sites);
    if (config.model == WalkModel::quantum) {
        ComplexVector psi = start.amplitudes;
        const CoinMatrix coin = hadamard_like_coin();
        for (std::size_t t = 0;; ++t) {
            for (std::size_t s = 0; s < sites; ++s) {
                prob[s] = std::norm(psi[static_cast<Eigen::Index>(2 * s)]) +
                          std::norm(psi[static_cast<Eigen::Index>(2 * s + 1)]);
            }
            record(t, prob);
            if (t == config.steps) break;
            apply_unitary(psi, g, coin);
        }
    } else {
        for (std::size_t s = 0; s < sites; ++s) {
            prob[s] = std::norm(start.amplitudes[static_cast<Eigen::Index>(2 * s)]) +
                      std::norm(start.amplitudes[static_cast<Eigen::Index>(2 * s + 1)]);
        }
        std::vector<double> next(sites);
        for (std::size_t t = 0;; ++t) {
            record(t, prob);
            if (t == config.steps) break;
            for (std::size_t s = 0; s < sites; ++s) {
                const double from_left = s > 0 ? prob[s - 1] : 0.0;
                const double from_right = s + 1 < sites ? prob[s + 1] : 0.0;
                next[s] = 0.5 * (from_left + from_right);
            }
            prob.swap(next);
        }
    }

    result.fit_begin = config.steps / 2;
    result.fit_end = config.steps;
    result.fitted_exponent = fit_power_law(result.msd, result.fit_begin, result.fit_end);
    return result;
}

}  // namespace hitwalk
