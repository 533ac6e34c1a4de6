#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "jk/dense.hpp"

namespace jk {

struct UnknownFixture : Error {
    using Error::Error;
};
struct BadRank : Error {
    using Error::Error;
};
struct BadBandIndex : Error {
    using Error::Error;
};
struct BadMoveIndex : Error {
    using Error::Error;
};
struct PreconditionFail : Error {
    using Error::Error;
};
struct MuOverflow : Error {
    using Error::Error;
};
struct ConstructionFailed : Error {
    using Error::Error;
};

using MatrixPair = std::pair<DenseMatrix, DenseMatrix>;

struct Fixture {
    std::string id;
    DenseMatrix a, b;
    std::optional<DenseMatrix> witness;
    bool expect_weak_min_fails = false;  // min(even) > min(odd)
    bool expect_weak_max_holds = false;  // max(odd) ≤ max(even)
};

/// Frozen integer pairs: "A0B0" (with its skew witness), "Anonneg", "Askew".
Fixture fixture(const std::string& id);

/// Count of eigenvalues above cutoff 1e−9·max|λ|; skew inputs use the singular values.
int numerical_rank(const DenseMatrix& m);

/// Random symmetric (sum of k rank-1 terms) or skew (k/2 planar blocks) pair of
/// verified rank exactly k for each matrix; deterministic in (n, k, seed).
MatrixPair random_pair(int n, int k, bool skew, uint64_t seed);

/// One random symmetric matrix of verified rank k (helper behind random_pair).
DenseMatrix random_rank_k(int n, int k, bool skew, uint64_t seed);

/// Diagonal A plus a symmetric anti-diagonal band at positions (i, k−i+1), B diagonal.
MatrixPair diag_antiband_pair(int n, int k, uint64_t seed);

/// Random symmetric tridiagonal A with diagonal B; the moved variant relocates
/// entry (s+1,s) to (r,s) with r > s+1 (1-based indices).
MatrixPair tridiag_pair(int n, uint64_t seed, std::optional<std::pair<int, int>> moved = std::nullopt);

struct PerturbParams {
    double beta = 1.0;
    std::optional<DenseMatrix> d1, d2;  // diagonal matrices for variants iii/iv
};

struct PerturbResult {
    DenseMatrix a, b;
    double mu;
};

/// Doubling search realizing the "μ large enough" perturbations that restore
/// weak interlacing. Variants: 1:(A+μI,B) 2:(A+βB,B+μA) 3:(A+μD,B) 4:(A+μD₁,B+μD₂).
PerturbResult perturb_holds(const DenseMatrix& a, const DenseMatrix& b, int variant, const PerturbParams& params = {});

/// Doubling search producing pairs where weak interlacing fails, from a failing seed
/// pair (ā,b̄). Variant 1: (A+μā, b̄) — or (A+βμā, B+μb̄) when β is supplied —
/// variant 2: (A+μb̄, B+μā).
MatrixPair perturb_fails(const DenseMatrix& abar, const DenseMatrix& bbar, const DenseMatrix& a,
                         const DenseMatrix& b, int variant, std::optional<double> beta = std::nullopt);

/// Counterexample pair with min rank exactly k, max rank exactly m, dimension n
/// (k,m ≥ 3, n ≥ max{4,k}, m ≤ n), on which weak interlacing fails.
MatrixPair ladder(int k, int m, int n, double eps = 1e-3);

/// Commuting pair through a shared random orthogonal eigenbasis.
MatrixPair commuting_pair(int n, uint64_t seed);

}  // namespace jk
