#include "jk/reproduce.hpp"

#include <cmath>
#include <sstream>

#include "jk/constructions.hpp"
#include "jk/exact.hpp"
#include "jk/interlacing.hpp"
#include "jk/spectra.hpp"

namespace jk {

namespace {

ClaimResult claim(const std::string& name, bool pass, const std::string& detail = "") {
    return ClaimResult{name, pass, detail};
}

InterlaceReport report_for(const DenseMatrix& a, const DenseMatrix& b) {
    return check_all(spectrum_split(a, b), interlace_tol(a, b));
}

// Seeded search for a pair whose strong verdict fails positionally (two odd
// eigenvalues adjacent in the interior of the merged spectrum), confirmed at tol/10.
std::optional<MatrixPair> find_strong_failure(int n, int k, bool skew, uint64_t seed_base, int max_trials) {
    for (int t = 0; t < max_trials; ++t) {
        MatrixPair p = random_pair(n, k, skew, seed_base + static_cast<uint64_t>(t));
        SpectrumSplit split = spectrum_split(p.first, p.second);
        const double tol = interlace_tol(p.first, p.second);
        if (!check_strong(split, tol).holds && !check_strong(split, tol / 10).holds) return p;
    }
    return std::nullopt;
}

// Reference tables from the exact counterexample derivation, hard-coded for replay.
RationalMatrix printed_shifted_form() {
    return RationalMatrix::from_int_rows({{23, 0, -2, 6, 0, 0, 0, 0, 0, 0},
                                          {0, 17, -4, 12, 0, 1, -3, 0, 0, 0},
                                          {-2, -4, 17, 4, 0, 0, 0, 2, -6, 0},
                                          {6, 12, 4, 27, 0, 0, 0, 0, 0, 0},
                                          {0, 0, 0, 0, 19, 2, -6, 0, 0, 0},
                                          {0, 1, 0, 0, 2, 18, -2, 4, -12, 0},
                                          {0, -3, 0, 0, -6, -2, 15, 0, 0, 0},
                                          {0, 0, 2, 0, 0, 4, 0, 17, -4, 0},
                                          {0, 0, -6, 0, 0, -12, 0, -4, 11, 0},
                                          {0, 0, 0, 0, 0, 0, 0, 0, 0, 19}});
}

RationalMatrix printed_schur_u() {
    return RationalMatrix::from_int_rows({{28304835, -1656733, 6268100, -18804300},
                                          {-1656733, 19380198, 409032, -1227096},
                                          {6268100, 409032, 26714779, -4892120},
                                          {-18804300, -1227096, -4892120, 13075249}});
}

// Second-stage 3×3 matrix recomputed exactly from the printed U; the reference
// table's (1,3) entry drops a digit (−1,003,592,385,910 for −10,035,923,859,100).
RationalMatrix recomputed_ubar() {
    return RationalMatrix::from_int_rows(
        {{16491067038915L, -44736877814317L, -10035923859100L},
         {-44736877814317L, 251895149926086L, -654905634552L},
         {-10035923859100L, -654905634552L, 325369549310571L}});
}

std::vector<ClaimResult> reproduce_example12() {
    std::vector<ClaimResult> out;
    const Fixture fx = fixture("A0B0");
    const SpectrumSplit split = spectrum_split(fx.a, fx.b);
    const double tol = interlace_tol(fx.a, fx.b);
    const WeakVerdict weak = check_weak(split, tol);
    const double margin = weak.lhs_min_even - weak.rhs_min_odd;  // > 0 when min side fails
    {
        std::ostringstream d;
        d << "min(even)=" << weak.lhs_min_even << " > min(odd)=" << weak.rhs_min_odd;
        out.push_back(claim("weak interlacing fails on the min side", !weak.holds && margin > 1e-6, d.str()));
    }
    const Parity p = classify_parity(split.odd_vectors.col(split.odd_vectors.cols() - 1));
    out.push_back(claim("minimal eigenvector is skew-symmetric", p == Parity::Odd));
    out.push_back(claim("interlacing fails as implied", !check_interlacing(split, tol).holds));
    // A0 is in fact full rank (det = −200); the pair's minimum rank of 3 comes from B0
    out.push_back(claim("minimum rank of the pair is 3",
                        std::min(numerical_rank(fx.a), numerical_rank(fx.b)) == 3));
    return out;
}

std::vector<ClaimResult> reproduce_appendix_a() {
    std::vector<ClaimResult> out;
    const Fixture fx = fixture("A0B0");
    const RationalMatrix a = RationalMatrix::from_dense(fx.a);
    const RationalMatrix b = RationalMatrix::from_dense(fx.b);
    const RationalMatrix w = RationalMatrix::from_dense(*fx.witness);
    const Rational shift(19, 2);

    const Rational rho = exact_rayleigh(a, b, w);
    out.push_back(claim("exact Rayleigh quotient equals -9523/1002",
                        rho == Rational(-9523, 1002), to_string(rho)));
    out.push_back(claim("Rayleigh quotient below -19/2", rho < -shift));

    const RationalMatrix printed = printed_shifted_form();
    out.push_back(claim("10x10 shifted quadratic form matches the reference table",
                        shifted_gram_form(a, b, shift) == printed));

    const RationalMatrix t9 = printed.block(0, 0, 9, 9);
    out.push_back(claim("leading 5x5 block is strictly diagonally dominant",
                        diag_dominant(t9.block(0, 0, 5, 5))));

    const Rational det_x = leading_minor(t9, 5);
    out.push_back(claim("det of the 5x5 block equals 1601111", det_x == 1601111, to_string(det_x)));

    const RationalMatrix u = exact_schur(t9, 5).scaled(det_x);
    out.push_back(claim("scaled Schur complement matches the printed 4x4 U", u == printed_schur_u()));

    const RationalMatrix u4 = printed_schur_u();
    const RationalMatrix row = u4.block(3, 0, 1, 3);
    const RationalMatrix ubar = u4.block(0, 0, 3, 3).scaled(u4(3, 3)) - row.transpose() * row;
    out.push_back(claim("second-stage 3x3 matrix matches (with the (1,3) digit fixed)",
                        ubar == recomputed_ubar()));

    out.push_back(claim("leading 2x2 determinant of the 3x3 matrix is positive",
                        leading_minor(ubar, 2) > 0));
    out.push_back(claim("determinant of the 3x3 matrix is positive", leading_minor(ubar, 3) > 0));

    const CounterexampleCertificate cert = certify_skew_extremal("A0B0", a, b, w, shift);
    out.push_back(claim("exact certificate concludes MinEigvecSkew", cert.min_eigvec_skew,
                        cert.failed_stage.empty() ? "" : "failed stage: " + cert.failed_stage));
    return out;
}

std::vector<ClaimResult> reproduce_example_a2() {
    std::vector<ClaimResult> out;
    {
        const Fixture fx = fixture("Anonneg");
        const SpectrumSplit split = spectrum_split(fx.a, fx.b);
        const WeakVerdict weak = check_weak(split, interlace_tol(fx.a, fx.b));
        out.push_back(claim("nonnegative pair: max side of weak interlacing holds",
                            weak.rhs_max_even - weak.lhs_max_odd > 1e-6));
        out.push_back(claim("nonnegative pair: min side of weak interlacing fails",
                            weak.lhs_min_even - weak.rhs_min_odd > 1e-6));
        const Parity pmax = classify_parity(split.even_vectors.col(0));
        out.push_back(claim("nonnegative pair: maximal eigenvector is symmetric", pmax == Parity::Even));
    }
    {
        const Fixture fx = fixture("Askew");
        const SpectrumSplit split = spectrum_split(fx.a, fx.b);
        const WeakVerdict weak = check_weak(split, interlace_tol(fx.a, fx.b));
        const double margin = std::max(weak.lhs_min_even - weak.rhs_min_odd,
                                       weak.lhs_max_odd - weak.rhs_max_even);
        out.push_back(claim("skew pair: weak interlacing fails", !weak.holds && margin > 1e-6));
        out.push_back(claim("skew pair: both matrices are full rank",
                            numerical_rank(fx.a) == 6 && numerical_rank(fx.b) == 6));
    }
    return out;
}

std::vector<ClaimResult> reproduce_lemma_commuting() {
    std::vector<ClaimResult> out;
    int checked = 0, matched = 0;
    double worst = 0;
    for (int n = 2; n <= 5; ++n) {
        for (int s = 0; s < 25; ++s) {
            const auto [a, b] = commuting_pair(n, 9000 + static_cast<uint64_t>(100 * n + s));
            const CommutingPrediction pred = commuting_spectrum(a, b);
            const SpectrumSplit split = spectrum_split(a, b);
            bool ok = pred.even_values.size() == split.even_values.size() &&
                      pred.odd_values.size() == split.odd_values.size();
            for (size_t i = 0; ok && i < pred.even_values.size(); ++i) {
                worst = std::max(worst, std::abs(pred.even_values[i] - split.even_values[i]));
                ok = std::abs(pred.even_values[i] - split.even_values[i]) <= 1e-8;
            }
            for (size_t i = 0; ok && i < pred.odd_values.size(); ++i) {
                worst = std::max(worst, std::abs(pred.odd_values[i] - split.odd_values[i]));
                ok = std::abs(pred.odd_values[i] - split.odd_values[i]) <= 1e-8;
            }
            ++checked;
            if (ok) ++matched;
        }
    }
    std::ostringstream d;
    d << matched << "/" << checked << " pairs, worst deviation " << worst;
    out.push_back(claim("commuting pairs: predicted even/odd spectra match", matched == checked, d.str()));
    return out;
}

std::vector<ClaimResult> reproduce_lie_section3() {
    std::vector<ClaimResult> out;
    int checked = 0, ok_pairs = 0, ok_kernel = 0;
    for (int n = 2; n <= 4; ++n) {
        for (int s = 0; s < 34; ++s) {
            const auto [a, b] = random_pair(n, n, false, 7000 + static_cast<uint64_t>(100 * n + s));
            const DenseMatrix l = lie_kron(a, b);
            const double scale = 1.0 + l.frobenius_norm();
            const LieSpectrum spec = lie_spectrum(a, b);
            bool pairs_ok = true;
            for (const auto& pv : spec.paired) {
                const DenseMatrix r1 = l * pv.v - pv.v.scaled(pv.value);
                const DenseMatrix r2 = l * pv.tv + pv.tv.scaled(pv.value);
                if (r1.frobenius_norm() > 1e-8 * scale || r2.frobenius_norm() > 1e-8 * scale) pairs_ok = false;
                const DenseMatrix tv = apply_commutation(pv.v);
                if ((tv - pv.tv).frobenius_norm() > 1e-8 && (tv + pv.tv).frobenius_norm() > 1e-8)
                    pairs_ok = false;
            }
            bool kernel_ok = spec.null_sym.cols() >= n;
            for (int c = 0; kernel_ok && c < spec.null_sym.cols(); ++c) {
                const DenseMatrix u = spec.null_sym.col(c);
                if ((l * u).frobenius_norm() > 1e-8 * scale) kernel_ok = false;
                if (classify_parity(u) != Parity::Even) kernel_ok = false;
            }
            ++checked;
            if (pairs_ok) ++ok_pairs;
            if (kernel_ok) ++ok_kernel;
        }
    }
    std::ostringstream d1, d2;
    d1 << ok_pairs << "/" << checked;
    d2 << ok_kernel << "/" << checked;
    out.push_back(claim("nonzero eigenvalues come in ±λ pairs linked by T", ok_pairs == checked, d1.str()));
    out.push_back(claim("at least n symmetric kernel vectors", ok_kernel == checked, d2.str()));
    return out;
}

std::vector<ClaimResult> reproduce_table1() {
    std::vector<ClaimResult> out;

    // Row n = 2: all three properties hold.
    {
        bool ok = true;
        for (int s = 0; s < 40 && ok; ++s) {
            const int k = 1 + (s % 2);
            const auto [a, b] = random_pair(2, k, false, 100 + static_cast<uint64_t>(s));
            const InterlaceReport r = report_for(a, b);
            ok = r.weak.holds && r.full.holds && r.strong.holds;
        }
        out.push_back(claim("n=2: weak, interlacing and strong hold (40 seeded pairs)", ok));
    }

    // Row n = 3: weak + interlacing hold; strong fails (seeded witness).
    {
        bool ok = true;
        for (int s = 0; s < 40 && ok; ++s) {
            const auto [a, b] = random_pair(3, 3, false, 200 + static_cast<uint64_t>(s));
            const InterlaceReport r = report_for(a, b);
            ok = r.weak.holds && r.full.holds;
        }
        out.push_back(claim("n=3: weak and interlacing hold (40 seeded pairs)", ok));
        const auto witness = find_strong_failure(3, 3, false, 300, 500);
        out.push_back(claim("n=3: strong fails (seeded witness)", witness.has_value()));
    }

    // Row min rank <= 2: weak + interlacing hold (symmetric and skew); strong fails.
    {
        bool ok = true;
        for (int n = 3; n <= 6 && ok; ++n)
            for (int s = 0; s < 10 && ok; ++s) {
                const auto [a, b] = random_pair(n, 1 + (s % 2), false, 400 + static_cast<uint64_t>(10 * n + s));
                const InterlaceReport r = report_for(a, b);
                ok = r.weak.holds && r.full.holds;
            }
        for (int n = 4; n <= 6 && ok; n += 2)
            for (int s = 0; s < 10 && ok; ++s) {
                const auto [a, b] = random_pair(n, 2, true, 500 + static_cast<uint64_t>(10 * n + s));
                const InterlaceReport r = report_for(a, b);
                ok = r.weak.holds && r.full.holds;
            }
        out.push_back(claim("min rank <= 2: weak and interlacing hold (symmetric and skew pairs)", ok));
        const auto witness = find_strong_failure(4, 2, false, 600, 500);
        out.push_back(claim("min rank <= 2: strong fails (seeded witness)", witness.has_value()));
    }

    // Row n >= 4, ranks 3,3: all three fail, anchored by the exact fixture.
    {
        const Fixture fx = fixture("A0B0");
        const InterlaceReport r = report_for(fx.a, fx.b);
        out.push_back(claim("n>=4 ranks 3,3: weak and interlacing fail (fixture)",
                            !r.weak.holds && !r.full.holds));
        const auto witness = find_strong_failure(4, 3, false, 700, 500);
        out.push_back(claim("n>=4 ranks 3,3: strong fails (seeded witness)", witness.has_value()));
    }

    // Row k >= 3, n >= max{4,k}: ladder pairs fail weak (hence all three).
    {
        bool ok = true;
        std::ostringstream d;
        for (const auto [k, m, n] : {std::tuple<int, int, int>{3, 3, 4}, {3, 4, 4}, {4, 4, 5}, {4, 5, 6}}) {
            const auto [a, b] = ladder(k, m, n);
            const InterlaceReport r = report_for(a, b);
            const int ra = numerical_rank(a), rb = numerical_rank(b);
            const bool cell = !r.weak.holds && std::min(ra, rb) == k && std::max(ra, rb) == m;
            if (!cell) d << "(k=" << k << ",m=" << m << ",n=" << n << ") ";
            ok = ok && cell;
        }
        out.push_back(claim("ladder k>=3: weak fails with exact target ranks", ok, d.str()));
    }
    return out;
}

}  // namespace

std::vector<ClaimResult> reproduce(const std::string& id) {
    if (id == "table1") return reproduce_table1();
    if (id == "example12") return reproduce_example12();
    if (id == "appendixA") return reproduce_appendix_a();
    if (id == "exampleA2") return reproduce_example_a2();
    if (id == "lemma-commuting") return reproduce_lemma_commuting();
    if (id == "lie-section3") return reproduce_lie_section3();
    throw UnknownReport("unknown reproduction id: " + id);
}

bool all_pass(const std::vector<ClaimResult>& claims) {
    for (const auto& c : claims)
        if (!c.pass) return false;
    return true;
}

}  // namespace jk
