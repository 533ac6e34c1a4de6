#include "jk/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace jk {

namespace {

void require_pure_pair(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimMismatch("pair must be square matrices of equal dimension");
    const double ta = 1e-12 * (1.0 + a.max_abs());
    const double tb = 1e-12 * (1.0 + b.max_abs());
    const bool sym = a.is_symmetric(ta) && b.is_symmetric(tb);
    const bool skew = a.is_skew_symmetric(ta) && b.is_skew_symmetric(tb);
    if (!sym && !skew) throw MixedSymmetryClass("pair must be both symmetric or both skew-symmetric");
}

DenseMatrix congruence(const DenseMatrix& basis, const DenseMatrix& m) {
    return basis.transpose() * (m * basis);
}

}  // namespace

DenseMatrix jordan_kron(const DenseMatrix& a, const DenseMatrix& b) {
    require_pure_pair(a, b);
    return kron(a, b) + kron(b, a);
}

DenseMatrix sym_kron(const DenseMatrix& a, const DenseMatrix& b) {
    require_pure_pair(a, b);
    const ParityBasis pb = parity_basis(a.rows());
    return congruence(pb.sym_basis, kron(a, b));
}

DenseMatrix skew_kron(const DenseMatrix& a, const DenseMatrix& b) {
    require_pure_pair(a, b);
    const ParityBasis pb = parity_basis(a.rows());
    return congruence(pb.skew_basis, kron(a, b));
}

SpectrumSplit spectrum_split(const DenseMatrix& a, const DenseMatrix& b, double tol) {
    require_pure_pair(a, b);
    const int n = a.rows();
    const ParityBasis pb = parity_basis(n);
    const DenseMatrix k = kron(a, b);

    const EigenDecomposition ev = sym_eigen(congruence(pb.sym_basis, k));
    const EigenDecomposition od = sym_eigen(congruence(pb.skew_basis, k));

    SpectrumSplit s;
    s.n = n;
    s.classification_tol = tol;
    s.even_values = ev.values;
    s.odd_values = od.values;
    for (double& v : s.even_values) v *= 2.0;
    for (double& v : s.odd_values) v *= 2.0;
    s.even_vectors = pb.sym_basis * ev.vectors;
    s.odd_vectors = pb.skew_basis * od.vectors;
    s.block_residual = (pb.sym_basis.transpose() * (jordan_kron(a, b) * pb.skew_basis)).frobenius_norm();
    return s;
}

std::pair<DenseMatrix, SpectrumSplit> generalized_jordan(const DenseMatrix& a, const DenseMatrix& b,
                                                         const InvolutionBasis& basis, double tol) {
    require_pure_pair(a, b);
    const int n = a.rows();
    if (basis.p.rows() != n * n) throw DimMismatch("generalized_jordan: basis dimension mismatch");
    const DenseMatrix k = kron(a, b);
    const DenseMatrix c = k + basis.p * k * basis.p;

    SpectrumSplit s;
    s.n = n;
    s.classification_tol = tol;
    if (basis.s > 0) {
        const EigenDecomposition ev = sym_eigen(congruence(basis.theta, k));
        s.even_values = ev.values;
        for (double& v : s.even_values) v *= 2.0;
        s.even_vectors = basis.theta * ev.vectors;
    } else {
        s.even_vectors = DenseMatrix(n * n, 0);
    }
    if (basis.t > 0) {
        const EigenDecomposition od = sym_eigen(congruence(basis.theta_tilde, k));
        s.odd_values = od.values;
        for (double& v : s.odd_values) v *= 2.0;
        s.odd_vectors = basis.theta_tilde * od.vectors;
    } else {
        s.odd_vectors = DenseMatrix(n * n, 0);
    }
    if (basis.s > 0 && basis.t > 0)
        s.block_residual = (basis.theta.transpose() * (c * basis.theta_tilde)).frobenius_norm();
    return {c, s};
}

DenseMatrix lie_kron(const DenseMatrix& a, const DenseMatrix& b) {
    require_pure_pair(a, b);
    return kron(a, b) - kron(b, a);
}

LieSpectrum lie_spectrum(const DenseMatrix& a, const DenseMatrix& b, double tol) {
    const DenseMatrix l = lie_kron(a, b);
    const int n = a.rows();
    const double scale = l.frobenius_norm();
    const double cutoff = 1e-8 * (scale > 0.0 ? scale : 1.0);
    const EigenDecomposition d = sym_eigen(l);

    LieSpectrum ls;
    std::vector<int> pos, neg, zero;
    for (int i = 0; i < static_cast<int>(d.values.size()); ++i) {
        if (d.values[i] > cutoff)
            pos.push_back(i);
        else if (d.values[i] < -cutoff)
            neg.push_back(i);
        else
            zero.push_back(i);
    }
    // values sorted descending, so pos descending by value and neg ascending by |value|;
    // match greedily by |λ|.
    std::vector<bool> used(neg.size(), false);
    for (int ip : pos) {
        const double lam = d.values[ip];
        int best = -1;
        double bestgap = 0.0;
        for (size_t j = 0; j < neg.size(); ++j) {
            if (used[j]) continue;
            const double gap = std::abs(-d.values[neg[j]] - lam);
            if (best < 0 || gap < bestgap) {
                best = static_cast<int>(j);
                bestgap = gap;
            }
        }
        if (best < 0 || bestgap > tol * (1.0 + std::abs(lam))) continue;
        used[best] = true;
        LieSpectrum::PairedValue pv;
        pv.value = lam;
        pv.v = d.vectors.col(ip);
        pv.tv = apply_commutation(pv.v);
        ls.paired.push_back(std::move(pv));
    }

    // kernel basis: project near-null eigenvectors onto the symmetric subspace, re-orthonormalize
    const ParityBasis pb = parity_basis(n);
    std::vector<DenseMatrix> keep;
    for (int iz : zero) {
        DenseMatrix u = d.vectors.col(iz);
        u = pb.sym_basis * (pb.sym_basis.transpose() * u);  // QQᵀu
        for (const DenseMatrix& w : keep) u = u - w.scaled(w.dot(u));
        const double nn = u.frobenius_norm();
        if (nn > 1e-6) keep.push_back(u.scaled(1.0 / nn));
    }
    ls.null_sym = DenseMatrix(n * n, static_cast<int>(keep.size()));
    for (int j = 0; j < static_cast<int>(keep.size()); ++j) ls.null_sym.set_col(j, keep[j]);
    return ls;
}

Parity classify_parity(const DenseMatrix& v, double tol) {
    const double nv = v.frobenius_norm();
    if (nv == 0.0) throw ZeroVector("classify_parity: zero vector");
    const DenseMatrix tv = apply_commutation(v);
    if ((tv - v).frobenius_norm() <= tol * nv) return Parity::Even;
    if ((tv + v).frobenius_norm() <= tol * nv) return Parity::Odd;
    return Parity::Mixed;
}

}  // namespace jk
