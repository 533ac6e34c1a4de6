#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jk/constructions.hpp"
#include "jk/dense.hpp"
#include "jk/rng.hpp"

using namespace jk;

namespace {

DenseMatrix random_square(int n, Rng& rng) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = static_cast<double>(rng.uniform_int(-9, 9));
    return m;
}

DenseMatrix random_symmetric(int n, Rng& rng) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = static_cast<double>(rng.uniform_int(-9, 9));
    return m;
}

double max_diff(const DenseMatrix& a, const DenseMatrix& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("construction rejects non-finite entries") {
    CHECK_THROWS_AS(DenseMatrix(1, 2, {1.0, std::nan("")}), Error);
    CHECK_THROWS_AS(DenseMatrix(1, 1, {INFINITY}), Error);
    CHECK_THROWS_AS(DenseMatrix(2, 2, {1, 2, 3}), BadLength);
}

TEST_CASE("kron identity and definition expansion") {
    CHECK(max_diff(kron(DenseMatrix::identity(2), DenseMatrix::identity(2)), DenseMatrix::identity(4)) == 0.0);

    const DenseMatrix a = DenseMatrix::from_rows({{1, 2}, {3, 4}});
    const DenseMatrix b = DenseMatrix::from_rows({{0, 1}, {1, 0}});
    const DenseMatrix expect =
        DenseMatrix::from_rows({{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}});
    CHECK(max_diff(kron(a, b), expect) == 0.0);

    CHECK(max_diff(kron(DenseMatrix::diag({1, 2}), DenseMatrix::diag({3, 4})),
                   DenseMatrix::diag({3, 4, 6, 8})) == 0.0);
}

TEST_CASE("kron associativity on integer inputs") {
    Rng rng(11);
    const DenseMatrix a = random_square(2, rng), b = random_square(3, rng), c = random_square(2, rng);
    CHECK(max_diff(kron(kron(a, b), c), kron(a, kron(b, c))) == 0.0);
}

TEST_CASE("vec stacks columns and mat round-trips") {
    const DenseMatrix x = DenseMatrix::from_rows({{1, 2}, {3, 4}});
    const DenseMatrix v = vec(x);
    CHECK(v.rows() == 4);
    CHECK(v(0, 0) == 1);
    CHECK(v(1, 0) == 3);
    CHECK(v(2, 0) == 2);
    CHECK(v(3, 0) == 4);

    Rng rng(5);
    const DenseMatrix y = random_square(3, rng);
    CHECK(max_diff(mat(vec(y), 3, 3), y) == 0.0);
    CHECK_THROWS_AS(mat(vec(y), 2, 2), DimMismatch);
}

TEST_CASE("vec(AXB) = (B' kron A) vec(X)") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 4;
        const DenseMatrix a = random_square(n, rng), x = random_square(n, rng), b = random_square(n, rng);
        const DenseMatrix lhs = vec(a * x * b);
        const DenseMatrix rhs = kron(b.transpose(), a) * vec(x);
        CHECK(max_diff(lhs, rhs) <= 1e-12 * (1.0 + lhs.max_abs()));
    }
}

TEST_CASE("commutation matrix properties") {
    const DenseMatrix t2 = commutation_matrix(2);
    // rows e1, e3, e2, e4: swaps positions 2 and 3
    CHECK(t2(0, 0) == 1);
    CHECK(t2(1, 2) == 1);
    CHECK(t2(2, 1) == 1);
    CHECK(t2(3, 3) == 1);

    const DenseMatrix t3 = commutation_matrix(3);
    CHECK(max_diff(t3 * t3, DenseMatrix::identity(9)) == 0.0);
    CHECK(max_diff(t3, t3.transpose()) == 0.0);
    for (int i = 0; i < 9; ++i) {
        double row = 0, col = 0;
        for (int j = 0; j < 9; ++j) {
            row += t3(i, j);
            col += t3(j, i);
        }
        CHECK(row == 1.0);
        CHECK(col == 1.0);
    }

    Rng rng(3);
    const DenseMatrix a = random_square(3, rng), b = random_square(3, rng);
    CHECK(max_diff(t3 * kron(a, b) * t3, kron(b, a)) <= 1e-12 * (1.0 + kron(a, b).max_abs()));

    const DenseMatrix x = random_square(3, rng);
    CHECK(max_diff(t3 * vec(x), vec(x.transpose())) == 0.0);
    CHECK(max_diff(apply_commutation(vec(x)), vec(x.transpose())) == 0.0);
}

TEST_CASE("sym_eigen on analytic cases") {
    const EigenDecomposition d = sym_eigen(DenseMatrix::diag({3, 1, 2}));
    REQUIRE(d.values.size() == 3);
    CHECK(d.values[0] == doctest::Approx(3).epsilon(1e-12));
    CHECK(d.values[1] == doctest::Approx(2).epsilon(1e-12));
    CHECK(d.values[2] == doctest::Approx(1).epsilon(1e-12));

    const EigenDecomposition e = sym_eigen(DenseMatrix::from_rows({{2, 1}, {1, 2}}));
    CHECK(e.values[0] == doctest::Approx(3).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(1).epsilon(1e-12));
    const double s = 1.0 / std::sqrt(2.0);
    const DenseMatrix v0 = e.vector(0);
    CHECK(std::abs(std::abs(v0(0, 0)) - s) < 1e-10);
    CHECK(std::abs(v0(0, 0) - v0(1, 0)) < 1e-10);  // (1,1)/√2 up to sign
}

TEST_CASE("sym_eigen reconstruction and orthonormality on random 8x8") {
    Rng rng(23);
    const DenseMatrix m = random_symmetric(8, rng);
    const EigenDecomposition d = sym_eigen(m);
    DenseMatrix rec(8, 8);
    for (int k = 0; k < 8; ++k) {
        const DenseMatrix v = d.vector(k);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) rec(i, j) += d.values[static_cast<size_t>(k)] * v(i, 0) * v(j, 0);
    }
    CHECK((rec - m).frobenius_norm() <= 1e-10 * m.frobenius_norm());
    CHECK(max_diff(d.vectors.transpose() * d.vectors, DenseMatrix::identity(8)) <= 1e-10);
    CHECK(d.residual <= 1e-10 * m.frobenius_norm());
}

TEST_CASE("sym_eigen rejects asymmetric input") {
    CHECK_THROWS_AS(sym_eigen(DenseMatrix::from_rows({{1, 2}, {0, 1}})), NotSymmetric);
}

TEST_CASE("sym_eigen matches characteristic roots for 2x2") {
    // [[a,b],[b,c]]: roots (a+c)/2 ± sqrt(((a−c)/2)² + b²)
    const double a = 4, b = -3, c = 1;
    const EigenDecomposition d = sym_eigen(DenseMatrix::from_rows({{a, b}, {b, c}}));
    const double mid = (a + c) / 2, rad = std::sqrt((a - c) * (a - c) / 4 + b * b);
    CHECK(d.values[0] == doctest::Approx(mid + rad).epsilon(1e-10));
    CHECK(d.values[1] == doctest::Approx(mid - rad).epsilon(1e-10));
}

TEST_CASE("rayleigh quotient") {
    const DenseMatrix v = DenseMatrix::column({1, 2, -1});
    CHECK(rayleigh(DenseMatrix::identity(3), v) == doctest::Approx(1.0));
    CHECK(rayleigh(DenseMatrix::diag({6, 10, 10, 16}), DenseMatrix::column({1, 0, 0, 0})) == doctest::Approx(6.0));
    CHECK_THROWS_AS(rayleigh(DenseMatrix::identity(2), DenseMatrix::column({0, 0})), ZeroVector);

    const Fixture fx = fixture("A0B0");
    const double rho = rayleigh(kron(fx.a, fx.b), vec(*fx.witness));
    CHECK(rho == doctest::Approx(-19046.0 / 2004.0).epsilon(1e-12));
}
