#include "jk/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "jk/interlacing.hpp"
#include "jk/rng.hpp"
#include "jk/spectra.hpp"

namespace jk {

Fixture fixture(const std::string& id) {
    Fixture f;
    f.id = id;
    if (id == "A0B0") {
        f.a = DenseMatrix::from_rows({{2, 0, -1, 3}, {0, 0, -2, 6}, {-1, -2, 1, 2}, {3, 6, 2, 4}});
        f.b = DenseMatrix::diag({2, -1, -2, 0});
        f.witness = DenseMatrix::from_rows({{0, -15, -24, 10}, {15, 0, -36, -2}, {24, 36, 0, 53}, {-10, 2, -53, 0}});
        f.expect_weak_min_fails = true;
    } else if (id == "Anonneg") {
        f.a = DenseMatrix::from_rows({{98, 48, 88, 31}, {48, 33, 91, 116}, {88, 91, 91, 45}, {31, 116, 45, 139}});
        f.b = DenseMatrix::from_rows({{35, 23, 78, 125}, {23, 100, 91, 152}, {78, 91, 1, 120}, {125, 152, 120, 187}});
        f.expect_weak_min_fails = true;
        f.expect_weak_max_holds = true;  // nonnegative pair: Perron-Frobenius side
    } else if (id == "Askew") {
        // full-rank 6×6 skew pair whose minimal eigenvector is skew-symmetric
        // (margin ≈ 6.57, about 0.37% of ‖C‖_F)
        f.a = DenseMatrix::from_rows({{0, -7, 9, -9, -3, -4},
                                      {7, 0, 7, 6, -1, -9},
                                      {-9, -7, 0, 5, 7, 5},
                                      {9, -6, -5, 0, 9, -9},
                                      {3, 1, -7, -9, 0, 5},
                                      {4, 9, -5, 9, -5, 0}});
        f.b = DenseMatrix::from_rows({{0, 6, 6, 8, -9, 3},
                                      {-6, 0, 8, -4, -7, 8},
                                      {-6, -8, 0, -3, -6, 3},
                                      {-8, 4, 3, 0, 0, -7},
                                      {9, 7, 6, 0, 0, 8},
                                      {-3, -8, -3, 7, -8, 0}});
        f.expect_weak_min_fails = true;
    } else {
        throw UnknownFixture("unknown fixture id: " + id);
    }
    return f;
}

int numerical_rank(const DenseMatrix& m) {
    const double sym_tol = 1e-12 * (1.0 + m.max_abs());
    const bool skew = m.is_skew_symmetric(sym_tol) && !m.is_symmetric(sym_tol);
    // skew matrices are ranked through the eigenvalues of MᵀM (squared singular values)
    const DenseMatrix s = skew ? m.transpose() * m : m;
    const EigenDecomposition d = sym_eigen(s);
    double top = 0.0;
    for (double v : d.values) top = std::max(top, std::abs(v));
    if (top == 0.0) return 0;
    // the squared singular values of the MᵀM path carry eigensolver noise of order
    // eps·‖MᵀM‖, so their cutoff sits above that floor rather than at (1e−9)²
    const double cutoff = (skew ? 1e-13 : 1e-9) * top;
    int r = 0;
    for (double v : d.values)
        if (std::abs(v) > cutoff) ++r;
    return r;
}

DenseMatrix random_rank_k(int n, int k, bool skew, uint64_t seed) {
    if (skew && (k % 2 != 0)) throw BadRank("skew matrices have even rank");
    if (k < 0 || k > n) throw BadRank("rank out of range");
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        DenseMatrix m(n, n);
        if (!skew) {
            for (int t = 0; t < k; ++t) {
                const double alpha = static_cast<double>(rng.nonzero_int(-9, 9));
                std::vector<double> v(n);
                for (double& x : v) x = static_cast<double>(rng.uniform_int(-9, 9));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m(i, j) += alpha * v[i] * v[j];
            }
        } else {
            for (int t = 0; t < k / 2; ++t) {
                const double alpha = static_cast<double>(rng.nonzero_int(-9, 9));
                std::vector<double> u(n), v(n);
                for (double& x : u) x = static_cast<double>(rng.uniform_int(-9, 9));
                for (double& x : v) x = static_cast<double>(rng.uniform_int(-9, 9));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m(i, j) += alpha * (u[i] * v[j] - v[i] * u[j]);
            }
        }
        if (numerical_rank(m) == k) return m;
    }
    throw ConstructionFailed("random_rank_k: could not hit target rank");
}

MatrixPair random_pair(int n, int k, bool skew, uint64_t seed) {
    return {random_rank_k(n, k, skew, seed), random_rank_k(n, n - (skew ? n % 2 : 0), skew, seed ^ 0x5bd1e995u)};
}

MatrixPair diag_antiband_pair(int n, int k, uint64_t seed) {
    if (k < 2 || k > n) throw BadBandIndex("antiband: k must be in [2, n]");
    Rng rng(seed);
    std::vector<double> ad(n), bd(n);
    for (double& x : ad) x = static_cast<double>(rng.uniform_int(-9, 9));
    for (double& x : bd) x = static_cast<double>(rng.uniform_int(-9, 9));
    DenseMatrix a = DenseMatrix::diag(ad);
    for (int i = 1; i <= k / 2; ++i) {
        const int j = k - i + 1;  // 1-based anti-diagonal partner, i < j
        const double alpha = static_cast<double>(rng.nonzero_int(-9, 9));
        a(i - 1, j - 1) = alpha;
        a(j - 1, i - 1) = alpha;
    }
    return {a, DenseMatrix::diag(bd)};
}

MatrixPair tridiag_pair(int n, uint64_t seed, std::optional<std::pair<int, int>> moved) {
    Rng rng(seed);
    DenseMatrix a(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = static_cast<double>(rng.uniform_int(-9, 9));
    for (int i = 0; i + 1 < n; ++i) {
        const double x = static_cast<double>(rng.nonzero_int(-9, 9));
        a(i, i + 1) = a(i + 1, i) = x;
    }
    std::vector<double> bd(n);
    for (double& x : bd) x = static_cast<double>(rng.uniform_int(-9, 9));
    if (moved) {
        const auto [r, s] = *moved;  // 1-based
        if (r <= s + 1 || r > n || s < 1) throw BadMoveIndex("tridiag move requires r > s+1");
        const double val = a(s, s - 1);  // entry (s+1, s), 1-based
        a(s, s - 1) = a(s - 1, s) = 0.0;
        const double nz = val != 0.0 ? val : 1.0;
        a(r - 1, s - 1) = a(s - 1, r - 1) = nz;
    }
    return {a, DenseMatrix::diag(bd)};
}

namespace {

bool extreme_eigs_simple(const DenseMatrix& m) {
    const EigenDecomposition d = sym_eigen(m);
    const int n = m.rows();
    if (n < 2) return false;
    const double gap_tol = 1e-9 * (1.0 + std::abs(d.values.front()) + std::abs(d.values.back()));
    return (d.values[0] - d.values[1] > gap_tol) && (d.values[n - 2] - d.values[n - 1] > gap_tol);
}

bool is_indefinite(const DenseMatrix& m) {
    const EigenDecomposition d = sym_eigen(m);
    const double tol = 1e-12 * (1.0 + m.frobenius_norm());
    return d.values.front() > tol && d.values.back() < -tol;
}

bool weak_holds(const DenseMatrix& a, const DenseMatrix& b) {
    const SpectrumSplit s = spectrum_split(a, b);
    return check_weak(s, interlace_tol(a, b)).holds;
}

}  // namespace

PerturbResult perturb_holds(const DenseMatrix& a, const DenseMatrix& b, int variant, const PerturbParams& params) {
    const int n = a.rows();
    DenseMatrix probe;  // matrix whose indefiniteness/simple extremes the perturbation argument needs
    switch (variant) {
        case 1:
            probe = b;
            break;
        case 2:
            probe = a + b.scaled(params.beta);
            break;
        case 3:
            if (!params.d1) throw PreconditionFail("variant 3 requires diagonal D");
            probe = kron(b, *params.d1);
            break;
        case 4:
            if (!params.d1 || !params.d2) throw PreconditionFail("variant 4 requires D1 and D2");
            probe = kron(*params.d1, *params.d2);
            break;
        default:
            throw PreconditionFail("unknown perturbation variant");
    }
    if (!is_indefinite(probe)) throw PreconditionFail("perturbation target matrix is not indefinite");
    if (!extreme_eigs_simple(probe)) throw PreconditionFail("extreme eigenvalues are not simple");

    for (double mu = 1.0; mu <= 0x1p60; mu *= 2.0) {
        DenseMatrix pa, pb;
        switch (variant) {
            case 1:
                pa = a + DenseMatrix::identity(n).scaled(mu);
                pb = b;
                break;
            case 2:
                pa = a + b.scaled(params.beta);
                pb = b + a.scaled(mu);
                break;
            case 3:
                pa = a + params.d1->scaled(mu);
                pb = b;
                break;
            case 4:
                pa = a + params.d1->scaled(mu);
                pb = b + params.d2->scaled(mu);
                break;
        }
        if (weak_holds(pa, pb)) return {pa, pb, mu};
    }
    throw MuOverflow("perturb_holds: no mu up to 2^60 restored weak interlacing");
}

MatrixPair perturb_fails(const DenseMatrix& abar, const DenseMatrix& bbar, const DenseMatrix& a,
                         const DenseMatrix& b, int variant, std::optional<double> beta) {
    for (double mu = 1.0; mu <= 0x1p60; mu *= 2.0) {
        DenseMatrix pa, pb;
        if (variant == 1) {
            if (beta) {
                pa = a + abar.scaled(*beta * mu);
                pb = b + bbar.scaled(mu);
            } else {
                pa = a + abar.scaled(mu);
                pb = bbar;
            }
        } else if (variant == 2) {
            pa = a + bbar.scaled(mu);
            pb = b + abar.scaled(mu);
        } else {
            throw PreconditionFail("unknown perturbation variant");
        }
        if (!weak_holds(pa, pb)) return {pa, pb};
    }
    throw MuOverflow("perturb_fails: no mu up to 2^60 broke weak interlacing");
}

MatrixPair ladder(int k, int m, int n, double eps) {
    if (k < 3 || m < k) throw ConstructionFailed("ladder requires m >= k >= 3");
    if (n < std::max(4, k) || n < m) throw ConstructionFailed("ladder requires n >= max{4,k} and n >= m");

    // Base 4×4 pairs on which weak interlacing fails. The A0/B0 pair has ranks
    // (4,3), so the rank-(3,3) rung starts from a separately frozen pair instead.
    const DenseMatrix a33 = DenseMatrix::from_rows(
        {{1, 1, -17, -18}, {1, 1, 18, 10}, {-17, 18, -6, -7}, {-18, 10, -7, 12}});
    const DenseMatrix b33 = DenseMatrix::from_rows(
        {{6, 1, 13, -23}, {1, -1, 9, -14}, {13, 9, -17, 8}, {-23, -14, 8, -1}});
    const Fixture base = fixture("A0B0");

    for (int attempt = 0; attempt <= 40; ++attempt, eps /= 2.0) {
        DenseMatrix a(n, n), b(n, n);  // a carries the max rank m, b the min rank k
        int rank_a = 4, rank_b = 3;
        if (k == 3 && m == 3) {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    a(i, j) = a33(i, j);
                    b(i, j) = b33(i, j);
                }
            rank_a = rank_b = 3;
        } else {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    a(i, j) = base.a(i, j);
                    b(i, j) = base.b(i, j);
                }
            if (k >= 4) {
                for (int i = 0; i < 4; ++i) {
                    a(i, i) += eps;
                    b(i, i) += eps;
                }
                rank_b = 4;
            }
        }
        // ε padding on the diagonal extension lifts each matrix to its target rank
        for (int i = 4; i < 4 + (m - rank_a); ++i) a(i, i) = eps;
        for (int i = 4; i < 4 + (k - rank_b); ++i) b(i, i) = eps;

        const int ra = numerical_rank(a), rb = numerical_rank(b);
        if (std::min(ra, rb) != k || std::max(ra, rb) != m) continue;
        if (!weak_holds(a, b)) return {a, b};
    }
    throw ConstructionFailed("ladder: eps halving exhausted");
}

MatrixPair commuting_pair(int n, uint64_t seed) {
    Rng rng(seed);
    // random orthogonal basis from the eigenvectors of a random symmetric matrix
    DenseMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) g(i, j) = g(j, i) = rng.uniform() * 2.0 - 1.0;
    const DenseMatrix v = sym_eigen(g).vectors;
    std::vector<double> lam(n), mu(n);
    for (double& x : lam) x = static_cast<double>(rng.uniform_int(-9, 9));
    for (double& x : mu) x = static_cast<double>(rng.uniform_int(-9, 9));
    const DenseMatrix a = v * DenseMatrix::diag(lam) * v.transpose();
    const DenseMatrix b = v * DenseMatrix::diag(mu) * v.transpose();
    return {a, b};
}

}  // namespace jk
