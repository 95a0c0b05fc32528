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

#ifndef HITWALK_NUMERICS_H
#define HITWALK_NUMERICS_H

// Dense complex linear algebra shared by every other module.
//
// Matrices are column-major and vectorization is column stacking:
// vec(rho)[i + n*j] = rho(i, j). Under this convention the superoperator
// rho -> A rho B^dagger is the matrix conj(B) (x) A.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <initializer_list>

namespace hitwalk {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws NonFiniteValue if any entry is NaN or infinite.
    explicit ComplexMatrix(Eigen::MatrixXcd values);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix outer(const ComplexVector &ket, const ComplexVector &bra);

    std::size_t rows() const { return static_cast<std::size_t>(values_.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(values_.cols()); }
    bool is_square() const { return rows() == cols(); }

    Complex operator()(std::size_t r, std::size_t c) const { return values_(r, c); }
    Complex &operator()(std::size_t r, std::size_t c) { return values_(r, c); }

    const Eigen::MatrixXcd &eigen() const { return values_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    /// Largest entry magnitude.
    double max_abs() const;
    /// Induced infinity norm (max absolute row sum).
    double norm_inf() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

   private:
    Eigen::MatrixXcd values_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v);

/// Matrix product. Throws DimensionMismatch unless a.cols() == b.rows().
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Matrix of rho -> left * rho * right^dagger acting on vec(rho).
ComplexMatrix superoperator(const ComplexMatrix &left, const ComplexMatrix &right);

ComplexVector vectorize(const ComplexMatrix &rho);
ComplexMatrix devectorize(const ComplexVector &v, std::size_t dim);

/// Trace of devectorize(v, dim) without materializing the matrix.
Complex vec_trace(const ComplexVector &v, std::size_t dim);

double norm_inf(const ComplexVector &v);

/// LU factorization with partial pivoting of a square matrix.
class LUFactorization {
   public:
    /// Throws SingularMatrix when some pivot magnitude falls below
    /// 1e-13 * ||a||_inf.
    explicit LUFactorization(const ComplexMatrix &a);

    std::size_t dim() const { return dim_; }
    /// Reciprocal-condition based estimate of cond_1(a); >= 1.
    double condition_estimate() const { return condition_estimate_; }

    ComplexVector solve(const ComplexVector &b) const;

   private:
    std::size_t dim_ = 0;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
    double condition_estimate_ = 1.0;
};

ComplexVector lu_solve(const ComplexMatrix &a, const ComplexVector &b);

}  // namespace hitwalk

#endif  // HITWALK_NUMERICS_H
