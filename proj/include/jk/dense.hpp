#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimMismatch : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct NotInvolutory : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    using Error::Error;
};
struct MixedSymmetryClass : Error {
    using Error::Error;
};
struct BadLength : Error {
    using Error::Error;
};

/// Dense real matrix, row-major. Entries must be finite; construction rejects NaN/Inf.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols);
    DenseMatrix(int rows, int cols, std::vector<double> entries);

    static DenseMatrix identity(int n);
    static DenseMatrix diag(const std::vector<double>& d);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static DenseMatrix column(const std::vector<double>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return rows_ * cols_; }

    double operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    double& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const std::vector<double>& entries() const { return e_; }

    DenseMatrix transpose() const;
    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix operator-(const DenseMatrix& o) const;
    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix scaled(double s) const;

    DenseMatrix col(int c) const;
    void set_col(int c, const DenseMatrix& v);

    double trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    double dot(const DenseMatrix& o) const;  // entrywise, same shape

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric(double tol) const;
    bool is_skew_symmetric(double tol) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> e_;
    void check_finite() const;
};

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Column-stacking vectorization and its inverse.
DenseMatrix vec(const DenseMatrix& x);
DenseMatrix mat(const DenseMatrix& v, int rows, int cols);

/// Permutation T with T·vec(X) = vec(Xᵀ); symmetric and involutory.
DenseMatrix commutation_matrix(int n);

/// Applies the commutation matrix without forming it: v ↦ vec(mat(v)ᵀ).
DenseMatrix apply_commutation(const DenseMatrix& v);

double rayleigh(const DenseMatrix& m, const DenseMatrix& v);

struct EigenDecomposition {
    std::vector<double> values;  // descending
    DenseMatrix vectors;         // orthonormal columns, paired with values
    double residual;             // max_i ‖M vᵢ − λᵢ vᵢ‖₂

    DenseMatrix vector(int i) const { return vectors.col(i); }
};

/// Cyclic Jacobi eigensolver for symmetric matrices.
/// Throws NotSymmetric if max|M−Mᵀ| > 1e−12·(1+‖M‖_F), NoConvergence past 100 sweeps.
EigenDecomposition sym_eigen(const DenseMatrix& m, double tol = 1e-10);

}  // namespace jk
