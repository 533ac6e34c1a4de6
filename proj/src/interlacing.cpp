#include "jk/interlacing.hpp"

#include <algorithm>
#include <cmath>

namespace jk {

double interlace_tol(const DenseMatrix& a, const DenseMatrix& b, double factor) {
    const double fro = jordan_kron(a, b).frobenius_norm();
    return factor * (fro > 0.0 ? fro : 1.0);
}

WeakVerdict check_weak(const SpectrumSplit& split, double tol) {
    WeakVerdict v;
    if (split.odd_values.empty()) {
        v.holds = true;  // n = 1: no odd spectrum, nothing to violate
        if (!split.even_values.empty()) {
            v.lhs_min_even = split.even_values.back();
            v.rhs_max_even = split.even_values.front();
        }
        return v;
    }
    v.lhs_min_even = split.even_values.back();
    v.rhs_min_odd = split.odd_values.back();
    v.lhs_max_odd = split.odd_values.front();
    v.rhs_max_even = split.even_values.front();
    v.holds = (v.lhs_min_even <= v.rhs_min_odd + tol) && (v.lhs_max_odd <= v.rhs_max_even + tol);
    return v;
}

FullVerdict check_interlacing(const SpectrumSplit& split, double tol) {
    FullVerdict v;
    const auto& lam = split.even_values;
    const auto& beta = split.odd_values;
    const int s = static_cast<int>(lam.size());
    const int t = static_cast<int>(beta.size());
    v.holds = true;
    for (int i = 1; i <= t; ++i) {
        const double lower = lam[s - t + i - 1];
        const double upper = lam[i - 1];
        const double b = beta[i - 1];
        if (b < lower - tol || b > upper + tol) {
            v.holds = false;
            v.first_violation = FullVerdict::Violation{i, lower, b, upper};
            break;
        }
    }
    return v;
}

StrongVerdict check_strong(const SpectrumSplit& split, double tol) {
    struct Entry {
        double value;
        bool odd;
    };
    std::vector<Entry> merged;
    for (double v : split.even_values) merged.push_back({v, false});
    for (double v : split.odd_values) merged.push_back({v, true});
    std::stable_sort(merged.begin(), merged.end(), [&](const Entry& x, const Entry& y) {
        if (std::abs(x.value - y.value) <= tol) return !x.odd && y.odd;  // tie: even before odd
        return x.value > y.value;
    });

    const int m = static_cast<int>(merged.size());
    auto cluster_has_even = [&](int k) {
        for (int j = k; j >= 0 && std::abs(merged[j].value - merged[k].value) <= tol; --j)
            if (!merged[j].odd) return true;
        for (int j = k + 1; j < m && std::abs(merged[j].value - merged[k].value) <= tol; ++j)
            if (!merged[j].odd) return true;
        return false;
    };
    auto neighbor_even = [&](int k, int nb) {
        if (!merged[nb].odd) return true;
        return std::abs(merged[nb].value - merged[k].value) <= tol && cluster_has_even(k);
    };

    StrongVerdict v;
    v.holds = true;
    for (int k = 1; k + 1 < m; ++k) {
        if (!merged[k].odd) continue;
        if (!neighbor_even(k, k - 1) || !neighbor_even(k, k + 1)) {
            v.holds = false;
            v.first_violation = k + 1;
            break;
        }
    }
    return v;
}

InterlaceReport check_all(const SpectrumSplit& split, double tol) {
    InterlaceReport r;
    r.weak = check_weak(split, tol);
    r.full = check_interlacing(split, tol);
    r.strong = check_strong(split, tol);
    r.tol = tol;
    return r;
}

std::optional<std::vector<int>> embed_skew_in_sym(const DenseMatrix& a, const DenseMatrix& b) {
    const int n = a.rows();
    const ParityBasis pb = parity_basis(n);
    const DenseMatrix s = sym_kron(a, b);
    const DenseMatrix sk = skew_kron(a, b);
    const int t = skew_dim(n);

    // principal submatrix of S at the off-diagonal slots
    DenseMatrix p(t, t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) p(i, j) = s(pb.pair_pos_in_sym[i], pb.pair_pos_in_sym[j]);

    const double scale = std::max(p.max_abs(), sk.max_abs());
    const double tol = 1e-10 * (1.0 + scale);
    auto matches = [&](const std::vector<int>& sg) {
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (std::abs(sg[i] * sg[j] * sk(i, j) - p(i, j)) > tol) return false;
        return true;
    };

    std::vector<int> sigma(t, 1);
    for (int k = 0; k < n - 1 && k < t; ++k) sigma[k] = -1;
    if (matches(sigma)) return sigma;

    if (t <= 20) {
        for (uint32_t bits = 0; bits < (1u << t); ++bits) {
            for (int k = 0; k < t; ++k) sigma[k] = (bits >> k) & 1u ? -1 : 1;
            if (matches(sigma)) return sigma;
        }
    }
    return std::nullopt;
}

ExtremeSymTrace extreme_sym_trace(const DenseMatrix& a) {
    const EigenDecomposition d = sym_eigen(a);
    const int n = a.rows();
    const DenseMatrix v1 = d.vectors.col(0);
    const DenseMatrix vn = d.vectors.col(n - 1);
    ExtremeSymTrace e{d.values.front(), v1 * v1.transpose(), d.values.back(), vn * vn.transpose()};
    return e;
}

CommutingPrediction commuting_spectrum(const DenseMatrix& a, const DenseMatrix& b, double tol) {
    const double scale = a.frobenius_norm() * b.frobenius_norm();
    if ((a * b - b * a).frobenius_norm() > tol * (scale > 0.0 ? scale : 1.0))
        throw NotCommuting("commuting_spectrum: pair does not commute");
    const int n = a.rows();

    // common eigenbasis: diagonalize a generic combination, fall back across offsets
    // in case of accidental eigenvalue collisions
    DenseMatrix v;
    bool found = false;
    for (double c : {0.7548776662466927, 0.3247179572447461, 1.0}) {  // plastic-ratio style irrational offsets
        const EigenDecomposition d = sym_eigen(a + b.scaled(c));
        const DenseMatrix da = d.vectors.transpose() * (a * d.vectors);
        const DenseMatrix db = d.vectors.transpose() * (b * d.vectors);
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) off = std::max({off, std::abs(da(i, j)), std::abs(db(i, j))});
        if (off <= 1e-7 * (1.0 + scale)) {
            v = d.vectors;
            found = true;
            break;
        }
    }
    if (!found) throw NotCommuting("commuting_spectrum: no common eigenbasis found");

    std::vector<double> lam(n), mu(n);
    for (int i = 0; i < n; ++i) {
        const DenseMatrix vi = v.col(i);
        lam[i] = vi.dot(a * vi);
        mu[i] = vi.dot(b * vi);
    }
    CommutingPrediction pred;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double val = lam[i] * mu[j] + lam[j] * mu[i];
            pred.even_values.push_back(val);
            if (i != j) pred.odd_values.push_back(val);
        }
    std::sort(pred.even_values.rbegin(), pred.even_values.rend());
    std::sort(pred.odd_values.rbegin(), pred.odd_values.rend());
    return pred;
}

std::pair<DenseMatrix, DenseMatrix> reduce_b_diagonal(const DenseMatrix& a, const DenseMatrix& b) {
    const EigenDecomposition d = sym_eigen(b);
    const DenseMatrix abar = d.vectors.transpose() * (a * d.vectors);
    return {abar, DenseMatrix::diag(d.values)};
}

}  // namespace jk
