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

#ifndef HITWALK_WALK_H
#define HITWALK_WALK_H

// Coined walk on a finite chain with absorbing detectors at both ends.
//
// Basis |x> (x) |c>, c in {+1, -1}; flat index 2*(x - x_left) + (c == +1 ? 0 : 1).

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "hitwalk/numerics.h"

namespace hitwalk {

enum class Coin { plus, minus };

struct BasisIndex {
    int position;
    Coin coin;
};

class ChainGeometry {
   public:
    /// Throws InvalidGeometry unless x_left < x_start < x_right.
    static ChainGeometry build(int x_start, int x_left, int x_right);

    int x_start() const { return x_start_; }
    int x_left() const { return x_left_; }
    int x_right() const { return x_right_; }

    std::size_t site_count() const { return static_cast<std::size_t>(x_right_ - x_left_ + 1); }
    std::size_t dimension() const { return 2 * site_count(); }
    bool symmetric() const { return x_right_ - x_start_ == x_start_ - x_left_; }
    bool contains(int position) const { return position >= x_left_ && position <= x_right_; }
    bool is_target(int position) const { return position == x_left_ || position == x_right_; }
    std::vector<int> sites() const;

    std::size_t index(int position, Coin coin) const;
    BasisIndex basis(std::size_t flat) const;

    bool operator==(const ChainGeometry &) const = default;

   private:
    ChainGeometry(int x_start, int x_left, int x_right) : x_start_(x_start), x_left_(x_left), x_right_(x_right) {}

    int x_start_;
    int x_left_;
    int x_right_;
};

using CoinMatrix = Eigen::Matrix2cd;
using DensityMatrix = ComplexMatrix;

/// (1/sqrt 2) [[1, -1], [1, 1]], i.e. exp(-i pi/4 sigma_y).
CoinMatrix hadamard_like_coin();

/// Throws InvalidCoin unless ||c^dagger c - I||_inf <= 1e-10.
void validate_coin_unitary(const CoinMatrix &c);

/// Initial coin amplitudes (amplitude on +1, amplitude on -1).
class CoinSpec {
   public:
    static CoinSpec plus();
    /// (|+1> + i|-1>)/sqrt 2
    static CoinSpec symmetric();
    /// Throws InvalidCoin unless |up|^2 + |down|^2 == 1 to 1e-10.
    static CoinSpec explicit_coin(Complex up, Complex down);

    Complex up() const { return up_; }
    Complex down() const { return down_; }

   private:
    CoinSpec(Complex up, Complex down) : up_(up), down_(down) {}
    Complex up_;
    Complex down_;
};

struct WalkState {
    ComplexVector amplitudes;

    double norm_squared() const { return amplitudes.squaredNorm(); }
    DensityMatrix density() const { return ComplexMatrix::outer(amplitudes, amplitudes); }
};

struct WalkOperators {
    ChainGeometry geometry;
    CoinMatrix coin_block;
    ComplexMatrix step;       // S, periodic wrap at the chain ends
    ComplexMatrix coin;       // I_x (x) coin_block
    ComplexMatrix unitary;    // U = S C
    ComplexMatrix projector;  // P onto both coin states at the two targets
    ComplexMatrix survivor;   // W = I - P
};

WalkOperators build_operators(const ChainGeometry &geometry, const CoinMatrix &coin = hadamard_like_coin());

WalkState initial_state(const ChainGeometry &geometry, const CoinSpec &coin);

/// psi <- U psi in O(N), without forming U.
void apply_unitary(ComplexVector &psi, const ChainGeometry &geometry, const CoinMatrix &coin);

/// psi <- (I_x (x) sigma_x) psi
void apply_coin_flip(ComplexVector &psi);

/// Zero all amplitude on the target sites (psi <- W psi); returns the removed weight.
double remove_target_amplitude(ComplexVector &psi, const ChainGeometry &geometry);

/// Weight that the step operator would carry across the periodic seam.
double wrap_amplitude(const ComplexVector &psi, const ChainGeometry &geometry);

struct ConditionedStep {
    WalkState survivor;           // W U psi, unnormalized
    double detection_probability; // ||P U psi||^2
};

ConditionedStep conditioned_step(const WalkState &state, const WalkOperators &ops);

}  // namespace hitwalk

#endif  // HITWALK_WALK_H
