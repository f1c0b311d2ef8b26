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
#include "qdm/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <Eigen/Dense>

#include "qdm/errors.hpp"

namespace qdm {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string dims(std::size_t a, std::size_t b) {
    return std::to_string(a) + " vs " + std::to_string(b);
}

void require_same_dim(const Matrix &a, const Matrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw ShapeError(std::string(op) + ": dimension mismatch " +
                         dims(a.dim(), b.dim()));
    }
}

Eigen::MatrixXcd to_eigen(const Matrix &m) {
    Eigen::MatrixXcd out(m.dim(), m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

} // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw ShapeError("matrix of dim " + std::to_string(dim_) + " needs " +
                         std::to_string(dim_ * dim_) + " entries, got " +
                         std::to_string(entries_.size()));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw ShapeError("matrix literal is not square");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

bool Matrix::is_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Complex z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

Matrix operator*(Complex scale, const Matrix &m) {
    Matrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out(r, c) = scale * m(r, c);
        }
    }
    return out;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
    require_same_dim(a, b, "operator+");
    Matrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            out(r, c) = a(r, c) + b(r, c);
        }
    }
    return out;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    constexpr std::size_t cap = std::size_t{1} << kMaxQubits;
    if (da != 0 && db > cap / da) {
        throw CapacityError("kron: result dimension " + std::to_string(da) +
                            "*" + std::to_string(db) + " exceeds 2^" +
                            std::to_string(kMaxQubits));
    }
    const std::size_t d = da * db;
    Matrix out(d);
    for (std::size_t ra = 0; ra < da; ++ra) {
        for (std::size_t ca = 0; ca < da; ++ca) {
            const Complex s = a(ra, ca);
            if (s == Complex{}) {
                continue;
            }
            for (std::size_t rb = 0; rb < db; ++rb) {
                for (std::size_t cb = 0; cb < db; ++cb) {
                    out(ra * db + rb, ca * db + cb) = s * b(rb, cb);
                }
            }
        }
    }
    return out;
}

Matrix mat_mul(const Matrix &a, const Matrix &b) {
    require_same_dim(a, b, "mat_mul");
    const std::size_t d = a.dim();
    Matrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex s = a(r, k);
            if (s == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < d; ++c) {
                out(r, c) += s * b(k, c);
            }
        }
    }
    return out;
}

std::vector<Complex> mat_vec(const Matrix &m, std::span<const Complex> v) {
    if (m.dim() != v.size()) {
        throw ShapeError("mat_vec: dimension mismatch " + dims(m.dim(), v.size()));
    }
    std::vector<Complex> out(v.size());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < m.dim(); ++c) {
            acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double unitarity_deviation(const Matrix &m) {
    return max_abs_diff(mat_mul(m.adjoint(), m), Matrix::identity(m.dim()));
}

bool check_unitary(const Matrix &m, double tol) {
    return m.dim() > 0 && m.is_finite() && unitarity_deviation(m) <= tol;
}

Complex trace(const Matrix &m) {
    Complex t{};
    for (std::size_t i = 0; i < m.dim(); ++i) {
        t += m(i, i);
    }
    return t;
}

double hermiticity_deviation(const Matrix &m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = r; c < m.dim(); ++c) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

bool is_positive_semidefinite(const Matrix &m, double floor) {
    const std::size_t d = m.dim();
    if (d == 1) {
        return m(0, 0).real() >= -floor;
    }
    if (d == 2) {
        const double a = m(0, 0).real();
        const double b = m(1, 1).real();
        const double off = std::abs(m(0, 1));
        const double lambda_min =
            0.5 * (a + b) - std::sqrt(0.25 * (a - b) * (a - b) + off * off);
        return lambda_min >= -floor;
    }
    // m + floor*I is positive definite iff every eigenvalue of m exceeds -floor.
    std::vector<Complex> l(d * d);
    for (std::size_t j = 0; j < d; ++j) {
        double diag = m(j, j).real() + floor;
        for (std::size_t k = 0; k < j; ++k) {
            diag -= std::norm(l[j * d + k]);
        }
        if (!(diag > 0.0)) {
            return false;
        }
        const double ljj = std::sqrt(diag);
        l[j * d + j] = ljj;
        for (std::size_t i = j + 1; i < d; ++i) {
            Complex s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= l[i * d + k] * std::conj(l[j * d + k]);
            }
            l[i * d + j] = s / ljj;
        }
    }
    return true;
}

double norm_squared(std::span<const Complex> v) {
    double acc = 0.0;
    for (const Complex &z : v) {
        acc += std::norm(z);
    }
    return acc;
}

DensityMatrix DensityMatrix::from_matrix(Matrix m, const Tolerances &tol) {
    if (m.dim() == 0) {
        throw ValidationError("density matrix must have positive dimension");
    }
    if (!m.is_finite()) {
        throw ValidationError("density matrix has non-finite entries");
    }
    if (const double h = hermiticity_deviation(m); h > tol.hermiticity) {
        throw ValidationError("density matrix not Hermitian (deviation " + sci(h) + ")");
    }
    if (const double t = std::abs(trace(m) - 1.0); t > tol.norm) {
        throw ValidationError("density matrix trace deviates from 1 by " + sci(t));
    }
    if (!is_positive_semidefinite(m, tol.positivity)) {
        throw ValidationError("density matrix has a negative eigenvalue");
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> psi,
                                       const Tolerances &tol) {
    Matrix m(psi.size());
    for (std::size_t r = 0; r < psi.size(); ++r) {
        for (std::size_t c = 0; c < psi.size(); ++c) {
            m(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return from_matrix(std::move(m), tol);
}

double purity(const DensityMatrix &rho) {
    // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    return norm_squared(rho.matrix().entries());
}

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    require_same_dim(rho.matrix(), sigma.matrix(), "fidelity");
    const double overlap = trace(mat_mul(rho.matrix(), sigma.matrix())).real();
    constexpr double pure_cut = 1.0 - 1e-12;
    if (purity(rho) >= pure_cut || purity(sigma) >= pure_cut) {
        return std::clamp(overlap, 0.0, 1.0);
    }
    if (rho.dim() == 2) {
        const auto det = [](const Matrix &m) {
            return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
        };
        const double dd =
            std::max(0.0, det(rho.matrix())) * std::max(0.0, det(sigma.matrix()));
        return std::clamp(overlap + 2.0 * std::sqrt(dd), 0.0, 1.0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rho_eig(to_eigen(rho.matrix()));
    Eigen::VectorXd roots = rho_eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::MatrixXcd sqrt_rho = rho_eig.eigenvectors() *
                                      roots.cast<Complex>().asDiagonal() *
                                      rho_eig.eigenvectors().adjoint();
    Eigen::MatrixXcd inner = sqrt_rho * to_eigen(sigma.matrix()) * sqrt_rho;
    inner = 0.5 * (inner + inner.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> inner_eig(
        inner, Eigen::EigenvaluesOnly);
    const double root_trace =
        inner_eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return std::clamp(root_trace * root_trace, 0.0, 1.0);
}

DensityMatrix kron(const DensityMatrix &rho, const DensityMatrix &sigma) {
    return DensityMatrix::from_matrix(kron(rho.matrix(), sigma.matrix()));
}

namespace {

struct TraceIndex {
    std::size_t kept_mask = 0;
    std::vector<std::size_t> scatter; // kept-index -> bit pattern in full index
};

TraceIndex make_trace_index(std::size_t n_qubits,
                            std::span<const std::size_t> keep_bits) {
    if (keep_bits.empty()) {
        throw LayoutError("partial_trace: nothing to keep");
    }
    if (keep_bits.size() > kMaxDensityQubits) {
        throw CapacityError("partial_trace: keeping " +
                            std::to_string(keep_bits.size()) +
                            " qubits exceeds the cap of " +
                            std::to_string(kMaxDensityQubits));
    }
    TraceIndex idx;
    for (const std::size_t b : keep_bits) {
        if (b >= n_qubits) {
            throw LayoutError("partial_trace: bit " + std::to_string(b) +
                              " out of range");
        }
        if (idx.kept_mask & (std::size_t{1} << b)) {
            throw LayoutError("partial_trace: bit " + std::to_string(b) +
                              " listed twice");
        }
        idx.kept_mask |= std::size_t{1} << b;
    }
    const std::size_t m = keep_bits.size();
    idx.scatter.resize(std::size_t{1} << m);
    for (std::size_t k = 0; k < idx.scatter.size(); ++k) {
        std::size_t pattern = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (k & (std::size_t{1} << (m - 1 - j))) {
                pattern |= std::size_t{1} << keep_bits[j];
            }
        }
        idx.scatter[k] = pattern;
    }
    return idx;
}

} // namespace

DensityMatrix partial_trace(std::span<const Complex> psi, std::size_t n_qubits,
                            std::span<const std::size_t> keep_bits) {
    if (psi.size() != (std::size_t{1} << n_qubits)) {
        throw ShapeError("partial_trace: vector length " +
                         std::to_string(psi.size()) + " is not 2^" +
                         std::to_string(n_qubits));
    }
    const TraceIndex idx = make_trace_index(n_qubits, keep_bits);
    const std::size_t d = idx.scatter.size();
    Matrix out(d);
    const std::size_t rest_mask = (psi.size() - 1) & ~idx.kept_mask;
    // Walk every basis index whose kept bits are all zero; each one fixes a
    // configuration of the traced-out registers.
    for (std::size_t rest = 0;; rest = (rest - rest_mask) & rest_mask) {
        for (std::size_t r = 0; r < d; ++r) {
            const Complex a = psi[rest | idx.scatter[r]];
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < d; ++c) {
                out(r, c) += a * std::conj(psi[rest | idx.scatter[c]]);
            }
        }
        if (rest == rest_mask) {
            break;
        }
    }
    return DensityMatrix::from_matrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::size_t n_qubits,
                            std::span<const std::size_t> keep_bits) {
    if (rho.dim() != (std::size_t{1} << n_qubits)) {
        throw ShapeError("partial_trace: density matrix dimension " +
                         std::to_string(rho.dim()) + " is not 2^" +
                         std::to_string(n_qubits));
    }
    const TraceIndex idx = make_trace_index(n_qubits, keep_bits);
    const std::size_t d = idx.scatter.size();
    Matrix out(d);
    const std::size_t rest_mask = (rho.dim() - 1) & ~idx.kept_mask;
    for (std::size_t rest = 0;; rest = (rest - rest_mask) & rest_mask) {
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                out(r, c) += rho(rest | idx.scatter[r], rest | idx.scatter[c]);
            }
        }
        if (rest == rest_mask) {
            break;
        }
    }
    return DensityMatrix::from_matrix(std::move(out));
}

std::vector<std::size_t> kept_bits(std::span<const RegisterId> keep,
                                   const RegisterLayout &layout) {
    if (keep.empty()) {
        throw LayoutError("register set to keep is empty");
    }
    std::vector<std::size_t> bits;
    bits.reserve(keep.size());
    for (const RegisterId id : keep) {
        bits.push_back(layout.bit(id));
    }
    std::sort(bits.begin(), bits.end(), std::greater<>());
    bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
    return bits;
}

DensityMatrix partial_trace(std::span<const Complex> psi,
                            std::span<const RegisterId> keep,
                            const RegisterLayout &layout) {
    const auto bits = kept_bits(keep, layout);
    return partial_trace(psi, layout.total_qubits(), bits);
}

DensityMatrix partial_trace(const DensityMatrix &rho,
                            std::span<const RegisterId> keep,
                            const RegisterLayout &layout) {
    const auto bits = kept_bits(keep, layout);
    return partial_trace(rho, layout.total_qubits(), bits);
}

} // namespace qdm
