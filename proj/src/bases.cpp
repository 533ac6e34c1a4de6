#include "jk/bases.hpp"

#include <cmath>

namespace jk {

namespace {
constexpr double kSqrtHalf = 0.7071067811865475244;

int dim_from_length(int len, bool skew) {
    // solve len = n(n±1)/2
    for (int n = 1; n <= 2 * len + 2; ++n)
        if ((skew ? skew_dim(n) : sym_dim(n)) == len) return n;
    throw BadLength("vector length is not a triangular dimension");
}
}  // namespace

ParityBasis parity_basis(int n) {
    if (n < 1) throw DimMismatch("parity_basis: n must be positive");
    ParityBasis b;
    b.n = n;
    b.sym_basis = DenseMatrix(n * n, sym_dim(n));
    b.skew_basis = DenseMatrix(n * n, skew_dim(n));
    int sc = 0, kc = 0;
    for (int j = 0; j < n; ++j)
        for (int i = j; i < n; ++i) {
            // slot (i,j) with i >= j; as an (row,col) pair of the lower triangle.
            const int lo = j, hi = i;  // lo < hi for off-diagonal slots
            if (lo == hi) {
                b.sym_basis(lo * n + lo, sc) = 1.0;  // e_lo ⊗ e_lo
            } else {
                b.sym_basis(lo * n + hi, sc) = kSqrtHalf;
                b.sym_basis(hi * n + lo, sc) = kSqrtHalf;
                b.skew_basis(lo * n + hi, kc) = kSqrtHalf;
                b.skew_basis(hi * n + lo, kc) = -kSqrtHalf;
                b.pair_order.emplace_back(lo, hi);
                b.pair_pos_in_sym.push_back(sc);
                ++kc;
            }
            b.slot_order.emplace_back(lo, hi);
            ++sc;
        }
    return b;
}

InvolutionBasis involution_basis(const DenseMatrix& p) {
    if (!p.is_square()) throw DimMismatch("involution_basis: not square");
    const int n2 = p.rows();
    if (!p.is_symmetric(1e-10 * (1.0 + p.frobenius_norm()))) throw NotSymmetric("involution_basis: P not symmetric");
    const DenseMatrix p2 = p * p;
    if ((p2 - DenseMatrix::identity(n2)).max_abs() > 1e-10 * (1.0 + p.frobenius_norm()))
        throw NotInvolutory("involution_basis: P² ≠ I");

    const EigenDecomposition d = sym_eigen(p);
    InvolutionBasis b;
    b.p = p;
    // spectrum is exactly ±1; split at zero
    int s = 0;
    for (double v : d.values)
        if (v >= 0.0) ++s;
    b.s = s;
    b.t = n2 - s;
    b.theta = DenseMatrix(n2, b.s);
    b.theta_tilde = DenseMatrix(n2, b.t);
    int is = 0, it = 0;
    for (int k = 0; k < n2; ++k) {
        const DenseMatrix v = d.vectors.col(k);
        if (d.values[k] >= 0.0)
            b.theta.set_col(is++, v);
        else
            b.theta_tilde.set_col(it++, v);
    }
    return b;
}

DenseMatrix svec(const DenseMatrix& x) {
    if (!x.is_square()) throw DimMismatch("svec: not square");
    if (!x.is_symmetric(1e-12 * (1.0 + x.max_abs()))) throw NotSymmetric("svec: input not symmetric");
    const int n = x.rows();
    DenseMatrix v(sym_dim(n), 1);
    int k = 0;
    for (int j = 0; j < n; ++j)
        for (int i = j; i < n; ++i) v(k++, 0) = (i == j) ? x(i, i) : std::sqrt(2.0) * x(i, j);
    return v;
}

DenseMatrix smat(const DenseMatrix& v) {
    if (v.cols() != 1) throw BadLength("smat: expected a column vector");
    const int n = dim_from_length(v.rows(), false);
    DenseMatrix x(n, n);
    int k = 0;
    for (int j = 0; j < n; ++j)
        for (int i = j; i < n; ++i) {
            if (i == j)
                x(i, i) = v(k, 0);
            else
                x(i, j) = x(j, i) = v(k, 0) * kSqrtHalf;
            ++k;
        }
    return x;
}

DenseMatrix skvec(const DenseMatrix& x) {
    if (!x.is_square()) throw DimMismatch("skvec: not square");
    if (!x.is_skew_symmetric(1e-12 * (1.0 + x.max_abs()))) throw NotSymmetric("skvec: input not skew-symmetric");
    const int n = x.rows();
    DenseMatrix v(skew_dim(n), 1);
    int k = 0;
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) v(k++, 0) = (x(i, j) - x(j, i)) * kSqrtHalf;  // = (W_ji − W_ij)/√2 for (i,j)=(lo,hi) slots
    return v;
}

DenseMatrix skmat(const DenseMatrix& v) {
    if (v.cols() != 1) throw BadLength("skmat: expected a column vector");
    const int n = dim_from_length(v.rows(), true);
    DenseMatrix x(n, n);
    int k = 0;
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) {
            x(i, j) = v(k, 0) * kSqrtHalf;
            x(j, i) = -x(i, j);
            ++k;
        }
    return x;
}

}  // namespace jk
