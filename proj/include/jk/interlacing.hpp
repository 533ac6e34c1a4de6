#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jk/spectra.hpp"

namespace jk {

struct NotCommuting : Error {
    using Error::Error;
};

struct WeakVerdict {
    bool holds = false;
    double lhs_min_even = 0, rhs_min_odd = 0;
    double lhs_max_odd = 0, rhs_max_even = 0;
};

struct FullVerdict {
    bool holds = false;
    struct Violation {
        int i;          // 1-based odd index
        double lower;   // λ_{s−t+i}
        double beta;    // βᵢ
        double upper;   // λᵢ
    };
    std::optional<Violation> first_violation;
};

struct StrongVerdict {
    bool holds = false;
    std::optional<int> first_violation;  // 1-based position in the merged spectrum
};

struct InterlaceReport {
    WeakVerdict weak;
    FullVerdict full;
    StrongVerdict strong;
    double tol = 0;
};

/// min(even) ≤ min(odd) + tol and max(odd) ≤ max(even) + tol.
WeakVerdict check_weak(const SpectrumSplit& split, double tol);

/// λ_{s−t+i} − tol ≤ βᵢ ≤ λᵢ + tol for all i.
FullVerdict check_interlacing(const SpectrumSplit& split, double tol);

/// Every interior odd entry of the merged descending spectrum has even neighbors.
/// Ties (within tol) are ordered even-before-odd and an odd entry tied with an even
/// value in its tolerance cluster counts as having an even neighbor.
StrongVerdict check_strong(const SpectrumSplit& split, double tol);

InterlaceReport check_all(const SpectrumSplit& split, double tol);

/// Absolute tolerance used by the checkers for the pair (A,B): factor·‖A⊗B+B⊗A‖_F.
double interlace_tol(const DenseMatrix& a, const DenseMatrix& b, double factor = 1e-8);

/// Sign vector σ with D_σ·(A⊗ŝB)·D_σ equal to the off-diagonal-slot principal
/// submatrix of A⊗ˢB, if one exists. Tries σ_k = −1 for k < n−1 first, then an
/// exhaustive sign search for t ≤ 20.
std::optional<std::vector<int>> embed_skew_in_sym(const DenseMatrix& a, const DenseMatrix& b);

struct ExtremeSymTrace {
    double max;
    DenseMatrix argmax;  // unit-Frobenius symmetric witness
    double min;
    DenseMatrix argmin;
};

/// Extremes of trace(UAU) over unit-Frobenius symmetric U: λ₁(A) and λ_n(A).
ExtremeSymTrace extreme_sym_trace(const DenseMatrix& a);

struct CommutingPrediction {
    std::vector<double> even_values;  // descending, {λᵢμⱼ+λⱼμᵢ : i ≤ j}
    std::vector<double> odd_values;   // descending, {λᵢμⱼ+λⱼμᵢ : i < j}
};

CommutingPrediction commuting_spectrum(const DenseMatrix& a, const DenseMatrix& b, double tol = 1e-10);

/// (ā, D) with B = VDVᵀ, ā = VᵀAV, D descending diagonal; all verdicts invariant.
std::pair<DenseMatrix, DenseMatrix> reduce_b_diagonal(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace jk
