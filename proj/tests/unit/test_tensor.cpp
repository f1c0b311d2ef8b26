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
#include <catch_amalgamated.hpp>

#include "qdm/errors.hpp"
#include "qdm/tensor.hpp"
#include "support.hpp"

using namespace qdm;
using namespace qdm::test;

namespace {

const Matrix X{{0.0, 1.0}, {1.0, 0.0}};
const Matrix Z{{1.0, 0.0}, {0.0, -1.0}};

// Independent rx: cos(phi/2) I - i sin(phi/2) X written out by hand.
Matrix rx(double phi) {
    const double c = std::cos(phi / 2);
    const double s = std::sin(phi / 2);
    return {{c, -kI * s}, {-kI * s, c}};
}

} // namespace

TEST_CASE("kron of identities is the identity", "[tensor]") {
    CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
}

TEST_CASE("kron puts the first factor's index in the high block", "[tensor]") {
    const Matrix m = kron(X, Matrix::identity(2));
    const Matrix expected{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
    CHECK(m == expected);
}

TEST_CASE("kron(rx(pi/3), I) on |00>", "[tensor]") {
    const std::vector<Complex> e0{1.0, 0.0, 0.0, 0.0};
    const auto out = mat_vec(kron(GateSpec::rx(kPi / 3).matrix(), Matrix::identity(2)), e0);
    const std::vector<Complex> expected{std::cos(kPi / 6), 0.0, -kI * std::sin(kPi / 6), 0.0};
    CHECK(max_diff(out, expected) < 1e-15);
}

TEST_CASE("kron refuses to exceed the qubit cap", "[tensor]") {
    // 2^11 x 2^10 would be 21 qubits.
    CHECK_THROWS_AS(kron(Matrix::identity(std::size_t{1} << 11), Matrix::identity(1 << 10)),
                    CapacityError);
}

TEST_CASE("kron is associative", "[tensor][property]") {
    CounterRng rng(11);
    for (int t = 0; t < 25; ++t) {
        const Matrix a = random_matrix(rng, 2);
        const Matrix b = random_matrix(rng, 1 + t % 3);
        const Matrix c = random_matrix(rng, 2);
        CHECK(max_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-14);
    }
}

TEST_CASE("kron is bilinear and respects the mixed product", "[tensor][property]") {
    CounterRng rng(12);
    for (int t = 0; t < 25; ++t) {
        const Matrix a = random_matrix(rng, 2), b = random_matrix(rng, 2);
        const Matrix c = random_matrix(rng, 2), d = random_matrix(rng, 2);
        CHECK(max_diff(mat_mul(kron(a, b), kron(c, d)), kron(mat_mul(a, c), mat_mul(b, d))) <
              1e-13);
    }
}

TEST_CASE("mat_mul algebra", "[tensor]") {
    CHECK(max_diff(mat_mul(X, X), Matrix::identity(2)) == 0.0);
    CHECK(max_diff(mat_mul(Z, X), Complex(-1.0) * mat_mul(X, Z)) == 0.0);
    CHECK(max_diff(mat_mul(rx(0.7), rx(-1.9)), rx(0.7 - 1.9)) < 1e-12);
    CHECK(max_diff(mat_mul(rx(kPi / 3), rx(kPi / 12)), rx(5 * kPi / 12)) < 1e-12);
    CHECK_THROWS_AS(mat_mul(X, Matrix::identity(4)), ShapeError);
}

TEST_CASE("Matrix construction checks its shape", "[tensor]") {
    CHECK_THROWS_AS(Matrix(2, std::vector<Complex>(3)), ShapeError);
    CHECK_THROWS_AS((Matrix{{1.0, 0.0}, {0.0}}), ShapeError);
    CHECK_THROWS_AS(mat_vec(X, std::vector<Complex>(3)), ShapeError);
}

TEST_CASE("check_unitary", "[tensor]") {
    CHECK(check_unitary(Matrix::identity(2), 1e-9));
    CHECK(check_unitary(rx(0.37), 1e-9));
    Matrix halves(4);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            halves(r, c) = 0.5;
        }
    }
    // M^dagger M has every entry equal to 1, so the off-diagonals miss by 1.
    CHECK_FALSE(check_unitary(halves, 1e-9));
    CHECK(unitarity_deviation(halves) == Catch::Approx(1.0));
    CHECK_FALSE(check_unitary(Matrix{{1.0, 0.0}, {0.0, 2.0}}, 1e-9));
}

TEST_CASE("partial trace of a Bell pair is maximally mixed", "[tensor]") {
    const std::vector<Complex> bell{kH, 0.0, 0.0, kH};
    const std::size_t keep_low[] = {0};
    const DensityMatrix rho = partial_trace(bell, 2, keep_low);
    CHECK(std::abs(rho(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(rho(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(rho(0, 1)) == 0.0);
    CHECK(purity(rho) == Catch::Approx(0.5));
}

TEST_CASE("partial trace of a product state recovers the factor", "[tensor][property]") {
    CounterRng rng(13);
    for (int t = 0; t < 20; ++t) {
        const auto phi = random_state(rng, 2);
        const auto chi = random_state(rng, 4);
        std::vector<Complex> psi;
        for (const Complex a : phi) {
            for (const Complex b : chi) {
                psi.push_back(a * b);
            }
        }
        const std::size_t keep_high[] = {2};
        const DensityMatrix rho = partial_trace(psi, 3, keep_high);
        CHECK(max_diff(rho.matrix(), outer(phi, phi)) < 1e-14);
        CHECK(purity(rho) == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("partial trace keeps bits in the requested order", "[tensor]") {
    // |q2 q1 q0> = |0 1 1>: keeping (0, 2) must read q0 then q2, i.e. |10>.
    std::vector<Complex> psi(8);
    psi[0b011] = 1.0;
    const std::size_t keep[] = {0, 2};
    const DensityMatrix rho = partial_trace(psi, 3, keep);
    CHECK(rho(0b10, 0b10) == Complex(1.0));
}

TEST_CASE("partial trace of a two-branch toy state", "[tensor]") {
    // (|0>_C|0>_M|s0>_S + |1>_C|1>_M|s1>_S)/sqrt 2 over three qubits.
    const std::vector<Complex> s0 = mat_vec(rx(5 * kPi / 4), std::vector<Complex>{1.0, 0.0});
    const std::vector<Complex> s1 = mat_vec(rx(-5 * kPi / 4), std::vector<Complex>{1.0, 0.0});
    std::vector<Complex> psi(8);
    for (std::size_t s = 0; s < 2; ++s) {
        psi[0b000 | s] = kH * s0[s];
        psi[0b110 | s] = kH * s1[s];
    }
    const std::size_t keep_s[] = {0};
    const DensityMatrix rho = partial_trace(psi, 3, keep_s);
    const Matrix expected = Complex(0.5) * outer(s0, s0) + Complex(0.5) * outer(s1, s1);
    CHECK(max_diff(rho.matrix(), expected) < 1e-15);
    const Complex overlap = std::conj(s0[0]) * s1[0] + std::conj(s0[1]) * s1[1];
    CHECK(purity(rho) == Catch::Approx(0.5 + 0.5 * std::norm(overlap)).margin(1e-14));
    CHECK(purity(rho) < 1.0);
}

TEST_CASE("partial trace of a density matrix matches the pure-state path",
          "[tensor][property]") {
    CounterRng rng(14);
    for (int t = 0; t < 10; ++t) {
        const auto psi = random_state(rng, 16);
        const DensityMatrix full = DensityMatrix::from_pure(psi);
        const std::size_t keep[] = {3, 1};
        CHECK(max_diff(partial_trace(full, 4, keep).matrix(),
                       partial_trace(psi, 4, keep).matrix()) < 1e-14);
    }
}

TEST_CASE("register-level partial trace", "[tensor]") {
    const RegisterLayout layout = RegisterLayout::with_slots(1);
    std::vector<Complex> psi(layout.dimension());
    psi[0] = 1.0;
    const RegisterId unknown[] = {RegisterId::memory(2)};
    CHECK_THROWS_AS(partial_trace(std::span<const Complex>(psi), unknown, layout), LayoutError);
    const RegisterId all[] = {RegisterId::policy(), RegisterId::control(), RegisterId::memory(1),
                              RegisterId::system()};
    const DensityMatrix rho = partial_trace(std::span<const Complex>(psi), all, layout);
    CHECK(rho.dim() == 16);
    CHECK(rho(0, 0) == Complex(1.0));
}

TEST_CASE("purity bounds", "[tensor]") {
    CHECK(purity(DensityMatrix::from_matrix(Matrix{{0.5, 0.0}, {0.0, 0.5}})) == 0.5);
    CHECK(purity(DensityMatrix::from_pure(std::vector<Complex>{0.0, 1.0})) == 1.0);
}

TEST_CASE("density matrices are validated", "[tensor]") {
    CHECK_THROWS_AS(DensityMatrix::from_matrix(Matrix{{0.6, 0.0}, {0.0, 0.6}}), ValidationError);
    CHECK_THROWS_AS(DensityMatrix::from_matrix(Matrix{{0.5, 0.1}, {0.2, 0.5}}), ValidationError);
    CHECK_THROWS_AS(DensityMatrix::from_matrix(Matrix{{1.5, 0.0}, {0.0, -0.5}}), ValidationError);
    CHECK_THROWS_AS(DensityMatrix::from_matrix(Matrix{{NAN, 0.0}, {0.0, 1.0}}), ValidationError);
    // Positive diagonal and trace one, but a negative eigenvalue (-0.1).
    const Matrix indefinite{{0.25, 0.0, 0.0, 0.35},
                            {0.0, 0.25, 0.0, 0.0},
                            {0.0, 0.0, 0.25, 0.0},
                            {0.35, 0.0, 0.0, 0.25}};
    CHECK_THROWS_AS(DensityMatrix::from_matrix(indefinite), ValidationError);
    CHECK_THROWS_AS(DensityMatrix::from_pure(std::vector<Complex>{1.0, 1.0}), ValidationError);
}

TEST_CASE("positive semidefiniteness", "[tensor]") {
    CHECK(is_positive_semidefinite(Matrix{{1.0, 0.0}, {0.0, 0.0}}, 1e-9));
    CHECK_FALSE(is_positive_semidefinite(Matrix{{0.5, 0.6}, {0.6, 0.5}}, 1e-9));
    CounterRng rng(15);
    for (int t = 0; t < 10; ++t) {
        // A^dagger A is always PSD, including when A is singular.
        Matrix a = random_matrix(rng, 4);
        for (std::size_t c = 0; c < 4; ++c) {
            a(3, c) = 0.0;
        }
        CHECK(is_positive_semidefinite(mat_mul(a.adjoint(), a), 1e-9));
    }
}

TEST_CASE("fidelity", "[tensor]") {
    const auto zero = DensityMatrix::from_pure(std::vector<Complex>{1.0, 0.0});
    const auto one = DensityMatrix::from_pure(std::vector<Complex>{0.0, 1.0});
    const auto mixed = DensityMatrix::from_matrix(Matrix{{0.5, 0.0}, {0.0, 0.5}});
    CHECK(fidelity(zero, zero) == Catch::Approx(1.0));
    CHECK(fidelity(zero, one) == Catch::Approx(0.0).margin(1e-15));
    CHECK(fidelity(zero, mixed) == Catch::Approx(0.5));
    CHECK(fidelity(mixed, mixed) == Catch::Approx(1.0));
}

TEST_CASE("fidelity agrees with the commuting-state formula", "[tensor][property]") {
    // For diagonal rho and sigma, F = (sum_i sqrt(p_i q_i))^2.
    CounterRng rng(16);
    for (int t = 0; t < 20; ++t) {
        const std::size_t dim = t % 2 ? 2 : 4;
        std::vector<double> p(dim), q(dim);
        double sp = 0, sq = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            sp += p[i] = 0.05 + rng.uniform();
            sq += q[i] = 0.05 + rng.uniform();
        }
        Matrix a(dim), b(dim);
        double bc = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            a(i, i) = p[i] / sp;
            b(i, i) = q[i] / sq;
            bc += std::sqrt(p[i] / sp * q[i] / sq);
        }
        CHECK(fidelity(DensityMatrix::from_matrix(a), DensityMatrix::from_matrix(b)) ==
              Catch::Approx(bc * bc).margin(1e-12));
    }
}

TEST_CASE("fidelity is unitarily invariant", "[tensor][property]") {
    CounterRng rng(17);
    for (int t = 0; t < 10; ++t) {
        const auto u = kron(oracle::random_unitary(rng), oracle::random_unitary(rng));
        const auto mix = [&](CounterRng &g) {
            const auto x = random_state(g, 4), y = random_state(g, 4);
            return Complex(0.7) * outer(x, x) + Complex(0.3) * outer(y, y);
        };
        const Matrix a = mix(rng), b = mix(rng);
        const auto conj_by = [&](const Matrix &m) { return mat_mul(u, mat_mul(m, u.adjoint())); };
        const double f = fidelity(DensityMatrix::from_matrix(a), DensityMatrix::from_matrix(b));
        const double g = fidelity(DensityMatrix::from_matrix(conj_by(a)),
                                  DensityMatrix::from_matrix(conj_by(b)));
        CHECK(f == Catch::Approx(g).margin(1e-9));
        CHECK(f <= 1.0 + 1e-12);
    }
}
