#pragma once

#include <utility>
#include <vector>

#include "jk/dense.hpp"

namespace jk {

/// Orthonormal bases for the symmetric and skew-symmetric subspaces of R^{n²}.
///
/// Column order follows the lower triangle of an n×n matrix, column-major:
/// (1,1),(2,1),...,(n,1),(2,2),(3,2),...,(n,n). Diagonal slots give columns
/// eᵢ⊗eᵢ, off-diagonal slots (i<j) give (eᵢ⊗eⱼ + eⱼ⊗eᵢ)/√2 for Q and
/// (eᵢ⊗eⱼ − eⱼ⊗eᵢ)/√2 for Q̃ (skew slots keep the same relative pair order).
struct ParityBasis {
    int n = 0;
    DenseMatrix sym_basis;                          // n² × s(n), s = n(n+1)/2
    DenseMatrix skew_basis;                         // n² × t(n), t = n(n−1)/2
    std::vector<std::pair<int, int>> slot_order;    // 0-based (i,j), i ≤ j, per sym column
    std::vector<std::pair<int, int>> pair_order;    // 0-based (i,j), i < j, per skew column
    std::vector<int> pair_pos_in_sym;               // sym column index of each skew slot's pair
};

ParityBasis parity_basis(int n);

inline int sym_dim(int n) { return n * (n + 1) / 2; }
inline int skew_dim(int n) { return n * (n - 1) / 2; }

/// Orthonormal ±1 eigenspace bases of a symmetric involution P.
struct InvolutionBasis {
    DenseMatrix p;            // n² × n²
    DenseMatrix theta;        // n² × s, PΘ = Θ
    DenseMatrix theta_tilde;  // n² × t, PΘ̃ = −Θ̃
    int s = 0, t = 0;
};

InvolutionBasis involution_basis(const DenseMatrix& p);

/// svec(X) = Qᵀvec(X) for symmetric X; preserves the Frobenius norm.
DenseMatrix svec(const DenseMatrix& x);
DenseMatrix smat(const DenseMatrix& v);

/// skvec(W) = Q̃ᵀvec(W) for skew-symmetric W; preserves the Frobenius norm.
DenseMatrix skvec(const DenseMatrix& x);
DenseMatrix skmat(const DenseMatrix& v);

}  // namespace jk
