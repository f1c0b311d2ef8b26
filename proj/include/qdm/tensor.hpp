// Copyright 2026 The QDM Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/**
 * @file tensor.hpp
 *
 * Dense complex linear algebra used throughout the simulator: square
 * matrices, Kronecker and matrix products, unitarity checks, reduced density
 * matrices and the few scalar functionals (purity, fidelity) the analysis
 * layer needs. Storage is row-major; Kronecker products put the left
 * operand's index in the most significant position.
 */

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qdm/layout.hpp"
#include "qdm/tolerances.hpp"

namespace qdm {

using Complex = std::complex<double>;

/// Kept-register count above which a reduced density matrix is refused.
inline constexpr std::size_t kMaxDensityQubits = 10;

class Matrix {
  public:
    Matrix() = default;
    /// Zero matrix.
    explicit Matrix(std::size_t dim);
    /// Throws ShapeError unless entries.size() == dim * dim.
    Matrix(std::size_t dim, std::vector<Complex> entries);
    /// Row-wise literal; every row must have as many entries as there are rows.
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    [[nodiscard]] const Complex &operator()(std::size_t row,
                                            std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    [[nodiscard]] Matrix adjoint() const;
    [[nodiscard]] bool is_finite() const noexcept;

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

[[nodiscard]] Matrix operator*(Complex scale, const Matrix &m);
[[nodiscard]] Matrix operator+(const Matrix &a, const Matrix &b);

/// Kronecker product. CapacityError if the result exceeds 2^kMaxQubits.
[[nodiscard]] Matrix kron(const Matrix &a, const Matrix &b);

/// Matrix product. ShapeError on dimension mismatch.
[[nodiscard]] Matrix mat_mul(const Matrix &a, const Matrix &b);

/// m * v. ShapeError on dimension mismatch.
[[nodiscard]] std::vector<Complex> mat_vec(const Matrix &m,
                                           std::span<const Complex> v);

/// max_ij |a_ij - b_ij|. ShapeError on dimension mismatch.
[[nodiscard]] double max_abs_diff(const Matrix &a, const Matrix &b);

/// max_ij |(m^dagger m - I)_ij|.
[[nodiscard]] double unitarity_deviation(const Matrix &m);

/// True iff max_ij |(m^dagger m - I)_ij| <= tol.
[[nodiscard]] bool check_unitary(const Matrix &m, double tol);

[[nodiscard]] Complex trace(const Matrix &m);
[[nodiscard]] double hermiticity_deviation(const Matrix &m);

/// Smallest-eigenvalue test without an eigensolver: closed form for 2x2,
/// Cholesky of m + floor*I otherwise. True iff every eigenvalue >= -floor.
[[nodiscard]] bool is_positive_semidefinite(const Matrix &m, double floor);

[[nodiscard]] double norm_squared(std::span<const Complex> v);

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
  public:
    /// Throws ValidationError if `m` is not a density matrix within `tol`.
    static DensityMatrix from_matrix(Matrix m, const Tolerances &tol = {});
    /// |psi><psi| for a normalized vector.
    static DensityMatrix from_pure(std::span<const Complex> psi,
                                   const Tolerances &tol = {});

    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] const Complex &operator()(std::size_t row,
                                            std::size_t col) const {
        return m_(row, col);
    }
    [[nodiscard]] const Matrix &matrix() const noexcept { return m_; }

    friend bool operator==(const DensityMatrix &,
                           const DensityMatrix &) = default;

  private:
    explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

/// Tr(rho^2).
[[nodiscard]] double purity(const DensityMatrix &rho);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
[[nodiscard]] double fidelity(const DensityMatrix &rho,
                              const DensityMatrix &sigma);

/// rho (x) sigma as a density matrix.
[[nodiscard]] DensityMatrix kron(const DensityMatrix &rho,
                                 const DensityMatrix &sigma);

/**
 * Reduced state of a pure vector over `n_qubits` qubits, keeping the bit
 * positions `keep_bits`. Output index bit j (counted from the most significant
 * end) corresponds to keep_bits[j].
 */
[[nodiscard]] DensityMatrix
partial_trace(std::span<const Complex> psi, std::size_t n_qubits,
              std::span<const std::size_t> keep_bits);

/// Same for a density matrix over `n_qubits` qubits.
[[nodiscard]] DensityMatrix
partial_trace(const DensityMatrix &rho, std::size_t n_qubits,
              std::span<const std::size_t> keep_bits);

/// Register-level partial trace of a pure state laid out by `layout`.
/// The kept registers appear in layout order regardless of the order given.
[[nodiscard]] DensityMatrix partial_trace(std::span<const Complex> psi,
                                          std::span<const RegisterId> keep,
                                          const RegisterLayout &layout);

[[nodiscard]] DensityMatrix partial_trace(const DensityMatrix &rho,
                                          std::span<const RegisterId> keep,
                                          const RegisterLayout &layout);

/// Bit positions for `keep` in layout order, deduplicated. LayoutError on an
/// unknown register or an empty set.
[[nodiscard]] std::vector<std::size_t>
kept_bits(std::span<const RegisterId> keep, const RegisterLayout &layout);

} // namespace qdm
