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

#include "hitwalk/numerics.h"

#include <cmath>
#include <limits>
#include <string>

#include "hitwalk/errors.h"

namespace hitwalk {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(op) + ": " + shape(a.rows(), a.cols()) + " vs " +
                                shape(b.rows(), b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : values_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols))) {}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd values) : values_(std::move(values)) {
    if (!values_.allFinite()) throw NonFiniteValue("matrix contains NaN or infinite entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return ComplexMatrix(Eigen::MatrixXcd::Identity(k, k));
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    std::size_t i = 0;
    for (const auto &row : rows) {
        if (row.size() != c) throw DimensionMismatch("from_rows: ragged rows");
        std::size_t j = 0;
        for (const Complex &v : row) m(i, j++) = v;
        ++i;
    }
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector &ket, const ComplexVector &bra) {
    return ComplexMatrix(Eigen::MatrixXcd(ket * bra.adjoint()));
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(Eigen::MatrixXcd(values_.adjoint())); }

ComplexMatrix ComplexMatrix::conjugate() const { return ComplexMatrix(Eigen::MatrixXcd(values_.conjugate())); }

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace of non-square " + shape(rows(), cols()));
    return values_.trace();
}

double ComplexMatrix::max_abs() const { return values_.size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff(); }

double ComplexMatrix::norm_inf() const {
    return values_.size() == 0 ? 0.0 : values_.cwiseAbs().rowwise().sum().maxCoeff();
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "add");
    values_ += other.values_;
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "subtract");
    values_ -= other.values_;
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    values_ *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) { return matmul(a, b); }

ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v) {
    if (a.cols() != static_cast<std::size_t>(v.size())) {
        throw DimensionMismatch("matrix-vector: " + shape(a.rows(), a.cols()) + " times length " +
                                std::to_string(v.size()));
    }
    return a.eigen() * v;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: " + shape(a.rows(), a.cols()) + " times " + shape(b.rows(), b.cols()));
    }
    Eigen::MatrixXcd out;
    out.noalias() = a.eigen() * b.eigen();
    return ComplexMatrix(std::move(out));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const auto ar = static_cast<Eigen::Index>(a.rows()), ac = static_cast<Eigen::Index>(a.cols());
    const auto br = static_cast<Eigen::Index>(b.rows()), bc = static_cast<Eigen::Index>(b.cols());
    Eigen::MatrixXcd out(ar * br, ac * bc);
    for (Eigen::Index j = 0; j < ac; ++j) {
        for (Eigen::Index i = 0; i < ar; ++i) {
            out.block(i * br, j * bc, br, bc) = a.eigen()(i, j) * b.eigen();
        }
    }
    return ComplexMatrix(std::move(out));
}

ComplexMatrix superoperator(const ComplexMatrix &left, const ComplexMatrix &right) {
    return kron(right.conjugate(), left);
}

ComplexVector vectorize(const ComplexMatrix &rho) {
    if (!rho.is_square()) throw DimensionMismatch("vectorize of non-square " + shape(rho.rows(), rho.cols()));
    return Eigen::Map<const ComplexVector>(rho.eigen().data(), rho.eigen().size());
}

ComplexMatrix devectorize(const ComplexVector &v, std::size_t dim) {
    if (static_cast<std::size_t>(v.size()) != dim * dim) {
        throw DimensionMismatch("devectorize: length " + std::to_string(v.size()) + " is not " +
                                std::to_string(dim) + "^2");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd(Eigen::Map<const Eigen::MatrixXcd>(v.data(), n, n)));
}

Complex vec_trace(const ComplexVector &v, std::size_t dim) {
    if (static_cast<std::size_t>(v.size()) != dim * dim) throw DimensionMismatch("vec_trace: length mismatch");
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) t += v[static_cast<Eigen::Index>(i * (dim + 1))];
    return t;
}

double norm_inf(const ComplexVector &v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

LUFactorization::LUFactorization(const ComplexMatrix &a) : dim_(a.rows()) {
    if (!a.is_square()) throw DimensionMismatch("LU of non-square " + shape(a.rows(), a.cols()));
    if (dim_ == 0) return;
    lu_.compute(a.eigen());
    const double scale = a.norm_inf();
    const double smallest_pivot = lu_.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(smallest_pivot >= 1e-13 * scale) || scale == 0.0) {
        throw SingularMatrix("pivot " + std::to_string(smallest_pivot) + " below 1e-13*||a|| = " +
                             std::to_string(1e-13 * scale));
    }
    const double rcond = lu_.rcond();
    condition_estimate_ = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
}

ComplexVector LUFactorization::solve(const ComplexVector &b) const {
    if (static_cast<std::size_t>(b.size()) != dim_) {
        throw DimensionMismatch("lu_solve: rhs length " + std::to_string(b.size()) + " for dim " +
                                std::to_string(dim_));
    }
    if (dim_ == 0) return b;
    return lu_.solve(b);
}

ComplexVector lu_solve(const ComplexMatrix &a, const ComplexVector &b) { return LUFactorization(a).solve(b); }

}  // namespace hitwalk
