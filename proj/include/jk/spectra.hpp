#pragma once

#include <utility>
#include <vector>

#include "jk/bases.hpp"
#include "jk/dense.hpp"

namespace jk {

enum class Parity { Even, Odd, Mixed };

/// Even/odd spectrum of a Jordan-Kronecker product, computed structurally in the
/// compressed s×s and t×t spaces so parity never depends on eigenvector tie-breaking.
struct SpectrumSplit {
    int n = 0;
    std::vector<double> even_values;  // descending, length s(n)
    std::vector<double> odd_values;   // descending, length t(n)
    DenseMatrix even_vectors;         // n² × s, symmetric vectors
    DenseMatrix odd_vectors;          // n² × t, skew-symmetric vectors
    double classification_tol = 1e-8;
    double block_residual = 0.0;      // ‖ΘᵀCΘ̃‖_F of the block diagonalization
};

constexpr double kDefaultParityTol = 1e-8;

/// A⊗B + B⊗A. Requires both inputs symmetric or both skew-symmetric.
DenseMatrix jordan_kron(const DenseMatrix& a, const DenseMatrix& b);

/// Qᵀ(A⊗B)Q and Q̃ᵀ(A⊗B)Q̃ — the symmetric/skew Kronecker compressions.
DenseMatrix sym_kron(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix skew_kron(const DenseMatrix& a, const DenseMatrix& b);

SpectrumSplit spectrum_split(const DenseMatrix& a, const DenseMatrix& b, double tol = kDefaultParityTol);

/// A⊗B + P(A⊗B)P for a symmetric involution P, with its even/odd split.
std::pair<DenseMatrix, SpectrumSplit> generalized_jordan(const DenseMatrix& a, const DenseMatrix& b,
                                                         const InvolutionBasis& basis,
                                                         double tol = kDefaultParityTol);

/// A⊗B − B⊗A and its paired ±λ spectrum.
DenseMatrix lie_kron(const DenseMatrix& a, const DenseMatrix& b);

struct LieSpectrum {
    struct PairedValue {
        double value;   // > 0
        DenseMatrix v;  // eigenvector of +value
        DenseMatrix tv; // T·v, eigenvector of −value
    };
    std::vector<PairedValue> paired;
    DenseMatrix null_sym;  // orthonormal symmetric kernel vectors (columns)
};

LieSpectrum lie_spectrum(const DenseMatrix& a, const DenseMatrix& b, double tol = kDefaultParityTol);

Parity classify_parity(const DenseMatrix& v, double tol = kDefaultParityTol);

}  // namespace jk
