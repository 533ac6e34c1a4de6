#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jk/constructions.hpp"
#include "jk/interlacing.hpp"

using namespace jk;

namespace {

bool weak_fails(const DenseMatrix& a, const DenseMatrix& b) {
    return !check_weak(spectrum_split(a, b), interlace_tol(a, b)).holds;
}

}  // namespace

TEST_CASE("fixture A0B0") {
    const Fixture fx = fixture("A0B0");
    REQUIRE(fx.a.rows() == 4);
    CHECK(fx.a(0, 0) == 2.0);
    CHECK(fx.a(3, 1) == 6.0);
    CHECK(fx.a(0, 2) == -1.0);
    CHECK(fx.a.is_symmetric(1e-12));
    CHECK(fx.b(0, 0) == 2.0);
    CHECK(fx.b(1, 1) == -1.0);
    CHECK(fx.b(3, 3) == 0.0);
    REQUIRE(fx.witness.has_value());
    CHECK(fx.witness->is_skew_symmetric(1e-12));
    CHECK((*fx.witness)(2, 3) == 53.0);
    CHECK(fx.expect_weak_min_fails);

    CHECK(numerical_rank(fx.a) == 4);  // det(A0) = −200, so the min rank comes from B0
    CHECK(numerical_rank(fx.b) == 3);
    CHECK(weak_fails(fx.a, fx.b));
}

TEST_CASE("fixture Anonneg") {
    const Fixture fx = fixture("Anonneg");
    REQUIRE(fx.a.rows() == 4);
    CHECK(fx.a.is_symmetric(1e-12));
    CHECK(fx.b.is_symmetric(1e-12));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(fx.a(i, j) >= 0.0);
            CHECK(fx.b(i, j) >= 0.0);
        }
    const WeakVerdict w = check_weak(spectrum_split(fx.a, fx.b), interlace_tol(fx.a, fx.b));
    CHECK_FALSE(w.holds);
    CHECK(w.lhs_max_odd <= w.rhs_max_even);  // max side holds for nonnegative pairs
}

TEST_CASE("fixture Askew") {
    const Fixture fx = fixture("Askew");
    REQUIRE(fx.a.rows() == 6);
    CHECK(fx.a.is_skew_symmetric(1e-12));
    CHECK(fx.b.is_skew_symmetric(1e-12));
    CHECK(numerical_rank(fx.a) == 6);
    CHECK(numerical_rank(fx.b) == 6);
    CHECK(weak_fails(fx.a, fx.b));

    CHECK_THROWS_AS(fixture("nope"), UnknownFixture);
}

TEST_CASE("numerical_rank") {
    CHECK(numerical_rank(DenseMatrix::identity(5)) == 5);
    CHECK(numerical_rank(DenseMatrix::diag({3, 0, -2, 0})) == 2);
    CHECK(numerical_rank(DenseMatrix(3, 3)) == 0);
    CHECK(numerical_rank(DenseMatrix::from_rows({{0, 1}, {-1, 0}})) == 2);
    // rank-2 skew 4×4
    DenseMatrix sk(4, 4);
    sk(0, 1) = 3;
    sk(1, 0) = -3;
    CHECK(numerical_rank(sk) == 2);
}

TEST_CASE("random_pair and random_rank_k") {
    for (int k = 1; k <= 4; ++k) {
        auto [a, b] = random_pair(4, k, false, 11 + static_cast<uint64_t>(k));
        CHECK(numerical_rank(a) == k);
        CHECK(numerical_rank(b) == 4);
        CHECK(a.is_symmetric(1e-12));
        CHECK(b.is_symmetric(1e-12));
    }
    for (int k = 2; k <= 6; k += 2) {
        auto [a, b] = random_pair(6, k, true, 23 + static_cast<uint64_t>(k));
        CHECK(numerical_rank(a) == k);
        CHECK(numerical_rank(b) == 6);
        CHECK(a.is_skew_symmetric(1e-12));
        CHECK(b.is_skew_symmetric(1e-12));
    }
    CHECK_THROWS_AS(random_rank_k(4, 3, true, 1), BadRank);
    CHECK_THROWS_AS(random_rank_k(4, 5, false, 1), BadRank);

    // deterministic in the seed, bitwise
    auto [a1, b1] = random_pair(5, 3, false, 321);
    auto [a2, b2] = random_pair(5, 3, false, 321);
    CHECK((a1 - a2).max_abs() == 0.0);
    CHECK((b1 - b2).max_abs() == 0.0);
    auto [a3, b3] = random_pair(5, 3, false, 322);
    CHECK((a1 - a3).max_abs() > 0.0);
}

TEST_CASE("diag_antiband_pair") {
    auto [a, b] = diag_antiband_pair(4, 4, 42);
    CHECK(a.is_symmetric(1e-12));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i != j) CHECK(b(i, j) == 0.0);
            // nonzeros of A only on the diagonal and the k=4 anti-band (i+j = 3, 0-based)
            if (i != j && i + j != 3) CHECK(a(i, j) == 0.0);
        }
    bool band_hit = false;
    for (int i = 0; i < 4; ++i)
        if (a(i, 3 - i) != 0.0 && i != 3 - i) band_hit = true;
    CHECK(band_hit);
    CHECK_THROWS_AS(diag_antiband_pair(4, 9, 1), BadBandIndex);
    CHECK_THROWS_AS(diag_antiband_pair(4, 1, 1), BadBandIndex);
}

TEST_CASE("tridiag_pair") {
    auto [a, b] = tridiag_pair(5, 7);
    CHECK(a.is_symmetric(1e-12));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (std::abs(i - j) > 1) CHECK(a(i, j) == 0.0);
            if (i != j) CHECK(b(i, j) == 0.0);
        }

    auto [am, bm] = tridiag_pair(5, 7, std::make_pair(4, 1));
    CHECK(am.is_symmetric(1e-12));
    CHECK(am(3, 0) != 0.0);  // entry moved from (2,1) to (4,1), 1-based
    CHECK(am(1, 0) == 0.0);
    CHECK_THROWS_AS(tridiag_pair(5, 7, std::make_pair(2, 1)), BadMoveIndex);
    CHECK_THROWS_AS(tridiag_pair(5, 7, std::make_pair(7, 1)), BadMoveIndex);
}

TEST_CASE("perturb_holds") {
    const Fixture fx = fixture("A0B0");
    REQUIRE(weak_fails(fx.a, fx.b));

    const PerturbResult r1 = perturb_holds(fx.a, fx.b, 1);
    CHECK(r1.mu > 0);
    CHECK_FALSE(weak_fails(r1.a, r1.b));
    CHECK((r1.a - fx.a - DenseMatrix::identity(4).scaled(r1.mu)).max_abs() == 0.0);
    CHECK((r1.b - fx.b).max_abs() == 0.0);

    const PerturbResult r2 = perturb_holds(fx.a, fx.b, 2, {.beta = 1.0});
    CHECK_FALSE(weak_fails(r2.a, r2.b));

    PerturbParams p4;
    p4.d1 = DenseMatrix::diag({5, 1, 2, 3});
    p4.d2 = DenseMatrix::diag({4, 1, -1, -3});
    const PerturbResult r4 = perturb_holds(fx.a, fx.b, 4, p4);
    CHECK_FALSE(weak_fails(r4.a, r4.b));

    PerturbParams pdef;
    pdef.d1 = DenseMatrix::identity(4);
    pdef.d2 = DenseMatrix::identity(4);
    CHECK_THROWS_AS(perturb_holds(fx.a, fx.b, 4, pdef), PreconditionFail);  // D1⊗D2 definite

    // variant 3 needs an indefinite-compatible diagonal direction or it can't converge;
    // a PD diagonal always works
    PerturbParams p3;
    p3.d1 = DenseMatrix::diag({2, 3, 1, 4});
    const PerturbResult r3 = perturb_holds(fx.a, fx.b, 3, p3);
    CHECK_FALSE(weak_fails(r3.a, r3.b));

    CHECK_THROWS_AS(perturb_holds(fx.a, fx.b, 3, {}), PreconditionFail);
    CHECK_THROWS_AS(perturb_holds(fx.a, fx.b, 7, {}), PreconditionFail);
}

TEST_CASE("perturb_fails") {
    const Fixture fx = fixture("A0B0");
    // start from a pair on which weak holds
    const DenseMatrix a = DenseMatrix::identity(4), b = DenseMatrix::diag({1, 2, 3, 4});
    REQUIRE_FALSE(weak_fails(a, b));

    auto [fa, fb] = perturb_fails(fx.a, fx.b, a, b, 1);
    CHECK(weak_fails(fa, fb));

    auto [ga, gb] = perturb_fails(fx.a, fx.b, a, b, 2);
    CHECK(weak_fails(ga, gb));

    // the trivial direction A = 0 lands exactly on a multiple of the seed pair
    auto [ha, hb] = perturb_fails(fx.a, fx.b, DenseMatrix(4, 4), b, 1);
    CHECK(weak_fails(ha, hb));

    CHECK_THROWS_AS(perturb_fails(fx.a, fx.b, a, b, 5), PreconditionFail);
}

TEST_CASE("ladder") {
    struct Cell {
        int k, m, n;
    };
    for (const Cell c : {Cell{3, 3, 4}, Cell{3, 4, 4}, Cell{4, 4, 5}, Cell{4, 5, 6}}) {
        auto [a, b] = ladder(c.k, c.m, c.n);
        REQUIRE(a.rows() == c.n);
        const int ra = numerical_rank(a), rb = numerical_rank(b);
        CHECK(std::min(ra, rb) == c.k);
        CHECK(std::max(ra, rb) == c.m);
        CHECK(weak_fails(a, b));
    }
    CHECK_THROWS_AS(ladder(2, 3, 4), ConstructionFailed);
    CHECK_THROWS_AS(ladder(4, 3, 5), ConstructionFailed);
    CHECK_THROWS_AS(ladder(3, 3, 2), ConstructionFailed);
    CHECK_THROWS_AS(ladder(3, 5, 4), ConstructionFailed);
}

TEST_CASE("commuting_pair") {
    for (uint64_t s = 0; s < 5; ++s) {
        auto [a, b] = commuting_pair(4, 500 + s);
        CHECK(a.is_symmetric(1e-12));
        CHECK(b.is_symmetric(1e-12));
        CHECK((a * b - b * a).max_abs() <= 1e-10 * (1.0 + (a * b).max_abs()));
    }
}
