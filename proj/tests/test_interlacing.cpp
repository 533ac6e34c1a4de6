#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "jk/constructions.hpp"
#include "jk/interlacing.hpp"
#include "jk/rng.hpp"

using namespace jk;

namespace {

DenseMatrix random_symmetric(int n, Rng& rng) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = static_cast<double>(rng.uniform_int(-9, 9));
    return m;
}

SpectrumSplit frozen_split(std::vector<double> even, std::vector<double> odd) {
    SpectrumSplit s;
    s.even_values = std::move(even);
    s.odd_values = std::move(odd);
    return s;
}

}  // namespace

TEST_CASE("checkers on a frozen diagonal-example split") {
    // the diag(1,2) ⊗ diag(3,4) spectrum: even {16,10,6}, odd {10}
    const SpectrumSplit s = frozen_split({16, 10, 6}, {10});
    CHECK(check_weak(s, 1e-9).holds);
    CHECK(check_interlacing(s, 1e-9).holds);
    // merged 16e, 10e, 10o, 6e: the tied odd value has an even partner
    CHECK(check_strong(s, 1e-9).holds);
}

TEST_CASE("weak verdict fields") {
    const SpectrumSplit s = frozen_split({5, -3}, {4, -1});
    const WeakVerdict w = check_weak(s, 0.0);
    CHECK(w.holds);
    CHECK(w.lhs_min_even == doctest::Approx(-3));
    CHECK(w.rhs_min_odd == doctest::Approx(-1));
    CHECK(w.lhs_max_odd == doctest::Approx(4));
    CHECK(w.rhs_max_even == doctest::Approx(5));

    const WeakVerdict wf = check_weak(frozen_split({5, 0}, {4, -1}), 1e-9);
    CHECK_FALSE(wf.holds);  // min(even) = 0 > min(odd) = −1
}

TEST_CASE("interlacing violation reporting") {
    // s = 3, t = 2: need λ_{1+i} − tol ≤ βᵢ ≤ λᵢ
    const FullVerdict f = check_interlacing(frozen_split({10, 5, 1}, {12, 3}), 1e-9);
    CHECK_FALSE(f.holds);
    REQUIRE(f.first_violation.has_value());
    CHECK(f.first_violation->i == 1);
    CHECK(f.first_violation->beta == doctest::Approx(12));
    CHECK(f.first_violation->upper == doctest::Approx(10));
}

TEST_CASE("strong: interior odd without even neighbors fails") {
    // merged: 10e, 4o, 3o, 1e — position 2 odd has odd right neighbor, no tie
    const StrongVerdict v = check_strong(frozen_split({10, 1}, {4, 3}), 1e-9);
    CHECK_FALSE(v.holds);
    REQUIRE(v.first_violation.has_value());
    CHECK((*v.first_violation == 2 || *v.first_violation == 3));
}

TEST_CASE("strong: boundary odds are exempt") {
    // merged: 9o(first), 5e, 2e, 1o(last) — holds: no interior odd entries
    CHECK(check_strong(frozen_split({5, 2}, {9, 1}), 1e-9).holds);
}

TEST_CASE("A0B0 fails weak and interlacing") {
    const Fixture fx = fixture("A0B0");
    const SpectrumSplit s = spectrum_split(fx.a, fx.b);
    const double tol = interlace_tol(fx.a, fx.b);
    const InterlaceReport r = check_all(s, tol);
    CHECK_FALSE(r.weak.holds);
    CHECK(r.weak.lhs_min_even > r.weak.rhs_min_odd + tol);  // min side fails
    CHECK(r.weak.lhs_max_odd <= r.weak.rhs_max_even + tol); // max side holds
    CHECK_FALSE(r.full.holds);
    CHECK(r.tol == doctest::Approx(tol));
}

TEST_CASE("implication chain: interlacing implies weak") {
    Rng rng(83);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 4;
        const DenseMatrix a = random_symmetric(n, rng), b = random_symmetric(n, rng);
        const double tol = interlace_tol(a, b);
        const InterlaceReport r = check_all(spectrum_split(a, b), tol);
        if (r.full.holds) CHECK(r.weak.holds);
        if (r.strong.holds) CHECK(r.full.holds);
    }
}

TEST_CASE("all 2x2 pairs satisfy everything, 3x3 satisfy weak and interlacing") {
    for (uint64_t s = 0; s < 40; ++s) {
        auto [a2, b2] = random_pair(2, 2, false, 4200 + s);
        const InterlaceReport r2 = check_all(spectrum_split(a2, b2), interlace_tol(a2, b2));
        CHECK(r2.weak.holds);
        CHECK(r2.full.holds);
        CHECK(r2.strong.holds);

        auto [a3, b3] = random_pair(3, 3, false, 4300 + s);
        const InterlaceReport r3 = check_all(spectrum_split(a3, b3), interlace_tol(a3, b3));
        CHECK(r3.weak.holds);
        CHECK(r3.full.holds);
    }
}

TEST_CASE("embed_skew_in_sym") {
    auto sigma = embed_skew_in_sym(DenseMatrix::diag({1, 2}), DenseMatrix::diag({3, 4}));
    REQUIRE(sigma.has_value());
    REQUIRE(sigma->size() == 1);
    CHECK((*sigma)[0] == -1);

    // B with ≥ 2 zero diagonal modes admits the embedding for any symmetric A
    Rng rng(89);
    const DenseMatrix a = random_symmetric(4, rng);
    const DenseMatrix b = DenseMatrix::diag({3, -2, 0, 0});
    CHECK(embed_skew_in_sym(a, b).has_value());

    const Fixture fx = fixture("A0B0");
    CHECK_FALSE(embed_skew_in_sym(fx.a, fx.b).has_value());
}

TEST_CASE("extreme_sym_trace") {
    const ExtremeSymTrace id = extreme_sym_trace(DenseMatrix::identity(3));
    CHECK(id.max == doctest::Approx(1));
    CHECK(id.min == doctest::Approx(1));

    const ExtremeSymTrace d = extreme_sym_trace(DenseMatrix::diag({5, -2}));
    CHECK(d.max == doctest::Approx(5));
    CHECK(d.min == doctest::Approx(-2));
    CHECK(d.argmax.frobenius_norm() == doctest::Approx(1));
    CHECK(d.argmin.frobenius_norm() == doctest::Approx(1));

    // sampled symmetric directions never beat the reported extremes
    Rng rng(97);
    const DenseMatrix a = random_symmetric(5, rng);
    const ExtremeSymTrace e = extreme_sym_trace(a);
    const double tol = 1e-9 * (1.0 + a.frobenius_norm());
    auto uau = [&](const DenseMatrix& u) {
        const double nrm = u.frobenius_norm();
        return (u * a * u).trace() / (nrm * nrm);
    };
    for (int t = 0; t < 2000; ++t) {
        DenseMatrix u(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j) u(i, j) = u(j, i) = rng.uniform() * 2.0 - 1.0;
        const double val = uau(u);
        CHECK(val <= e.max + tol);
        CHECK(val >= e.min - tol);
    }
    CHECK(uau(e.argmax) == doctest::Approx(e.max));
    CHECK(uau(e.argmin) == doctest::Approx(e.min));
}

TEST_CASE("commuting_spectrum matches spectrum_split for commuting pairs") {
    const DenseMatrix a = DenseMatrix::diag({1, 2}), b = DenseMatrix::diag({3, 4});
    const CommutingPrediction p = commuting_spectrum(a, b);
    REQUIRE(p.even_values.size() == 3);
    CHECK(p.even_values[0] == doctest::Approx(16));
    CHECK(p.even_values[1] == doctest::Approx(10));
    CHECK(p.even_values[2] == doctest::Approx(6));
    REQUIRE(p.odd_values.size() == 1);
    CHECK(p.odd_values[0] == doctest::Approx(10));

    const CommutingPrediction pi = commuting_spectrum(DenseMatrix::identity(3), DenseMatrix::identity(3));
    for (double v : pi.even_values) CHECK(v == doctest::Approx(2));
    for (double v : pi.odd_values) CHECK(v == doctest::Approx(2));

    Rng rng(101);
    const DenseMatrix ra = random_symmetric(3, rng), rb = random_symmetric(3, rng);
    CHECK_THROWS_AS(commuting_spectrum(ra, rb), NotCommuting);

    for (uint64_t s = 0; s < 10; ++s) {
        auto [ca, cb] = commuting_pair(4, 9100 + s);
        const CommutingPrediction cp = commuting_spectrum(ca, cb);
        const SpectrumSplit split = spectrum_split(ca, cb);
        const double tol = 1e-8 * (1.0 + jordan_kron(ca, cb).frobenius_norm());
        REQUIRE(cp.even_values.size() == split.even_values.size());
        for (size_t i = 0; i < cp.even_values.size(); ++i)
            CHECK(std::abs(cp.even_values[i] - split.even_values[i]) <= tol);
        for (size_t i = 0; i < cp.odd_values.size(); ++i)
            CHECK(std::abs(cp.odd_values[i] - split.odd_values[i]) <= tol);
        // commuting pairs satisfy the full interlacing property
        CHECK(check_interlacing(split, interlace_tol(ca, cb)).holds);
    }
}

TEST_CASE("reduce_b_diagonal preserves verdicts") {
    Rng rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + trial % 3;
        const DenseMatrix a = random_symmetric(n, rng), b = random_symmetric(n, rng);
        const auto [abar, d] = reduce_b_diagonal(a, b);
        // D is diagonal descending
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) CHECK(std::abs(d(i, j)) <= 1e-12);
        for (int i = 0; i + 1 < n; ++i) CHECK(d(i, i) >= d(i + 1, i + 1) - 1e-12);

        const double tol = interlace_tol(a, b);
        const InterlaceReport r1 = check_all(spectrum_split(a, b), tol);
        const InterlaceReport r2 = check_all(spectrum_split(abar, d), tol);
        CHECK(r1.weak.holds == r2.weak.holds);
        CHECK(r1.full.holds == r2.full.holds);
        CHECK(r1.strong.holds == r2.strong.holds);
    }

    const Fixture fx = fixture("A0B0");
    const auto [abar, d] = reduce_b_diagonal(fx.a, fx.b);
    CHECK_FALSE(check_weak(spectrum_split(abar, d), interlace_tol(fx.a, fx.b)).holds);
}

TEST_CASE("verdicts are invariant under positive scaling") {
    const Fixture fx = fixture("A0B0");
    const DenseMatrix a = fx.a.scaled(3.0), b = fx.b.scaled(0.5);
    CHECK_FALSE(check_weak(spectrum_split(a, b), interlace_tol(a, b)).holds);
    auto [ca, cb] = random_pair(2, 2, false, 777);
    CHECK(check_strong(spectrum_split(ca.scaled(10.0), cb), interlace_tol(ca.scaled(10.0), cb)).holds);
}

TEST_CASE("interlace_tol scales with the product norm") {
    const DenseMatrix a = DenseMatrix::identity(3), b = DenseMatrix::identity(3);
    const double base = interlace_tol(a, b);
    CHECK(base == doctest::Approx(1e-8 * jordan_kron(a, b).frobenius_norm()));
    CHECK(interlace_tol(a.scaled(2.0), b) == doctest::Approx(2.0 * base));
    CHECK(interlace_tol(a, b, 1e-6) == doctest::Approx(100.0 * base));
}
