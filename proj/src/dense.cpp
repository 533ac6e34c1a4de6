#include "jk/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace jk {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) throw DimMismatch("negative matrix dimension");
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw DimMismatch("negative matrix dimension");
    if (e_.size() != static_cast<size_t>(rows) * cols) throw BadLength("entry count does not match rows*cols");
    check_finite();
}

void DenseMatrix::check_finite() const {
    for (double x : e_)
        if (!std::isfinite(x)) throw Error("non-finite matrix entry");
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diag(const std::vector<double>& d) {
    DenseMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
    m.check_finite();
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    DenseMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw BadLength("ragged row list");
        int j = 0;
        for (double x : row) m(i, j++) = x;
        ++i;
    }
    m.check_finite();
    return m;
}

DenseMatrix DenseMatrix::column(const std::vector<double>& v) {
    DenseMatrix m(static_cast<int>(v.size()), 1, v);
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("add: shape mismatch");
    DenseMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("sub: shape mismatch");
    DenseMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw DimMismatch("mul: inner dimension mismatch");
    DenseMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

DenseMatrix DenseMatrix::scaled(double s) const {
    DenseMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = s * e_[k];
    return r;
}

DenseMatrix DenseMatrix::col(int c) const {
    DenseMatrix v(rows_, 1);
    for (int i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, c);
    return v;
}

void DenseMatrix::set_col(int c, const DenseMatrix& v) {
    if (v.rows() != rows_ || v.cols() != 1) throw DimMismatch("set_col: bad column shape");
    for (int i = 0; i < rows_; ++i) (*this)(i, c) = v(i, 0);
}

double DenseMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : e_) s += x * x;
    return std::sqrt(s);
}

double DenseMatrix::max_abs() const {
    double s = 0.0;
    for (double x : e_) s = std::max(s, std::abs(x));
    return s;
}

double DenseMatrix::dot(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("dot: shape mismatch");
    double s = 0.0;
    for (size_t k = 0; k < e_.size(); ++k) s += e_[k] * o.e_[k];
    return s;
}

bool DenseMatrix::is_symmetric(double tol) const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

bool DenseMatrix::is_skew_symmetric(double tol) const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) + (*this)(j, i)) > tol) return false;
    return true;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const double s = a(i, j);
            if (s == 0.0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q) r(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
        }
    return r;
}

DenseMatrix vec(const DenseMatrix& x) {
    DenseMatrix v(x.rows() * x.cols(), 1);
    for (int c = 0; c < x.cols(); ++c)
        for (int r = 0; r < x.rows(); ++r) v(c * x.rows() + r, 0) = x(r, c);
    return v;
}

DenseMatrix mat(const DenseMatrix& v, int rows, int cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) throw DimMismatch("mat: length does not match rows*cols");
    DenseMatrix x(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) x(r, c) = v(c * rows + r, 0);
    return x;
}

DenseMatrix commutation_matrix(int n) {
    DenseMatrix t(n * n, n * n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) t(c * n + r, r * n + c) = 1.0;
    return t;
}

DenseMatrix apply_commutation(const DenseMatrix& v) {
    const int n2 = v.rows();
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n2))));
    if (v.cols() != 1 || n * n != n2) throw DimMismatch("apply_commutation: not an n²-vector");
    return vec(mat(v, n, n).transpose());
}

double rayleigh(const DenseMatrix& m, const DenseMatrix& v) {
    if (!m.is_square() || v.cols() != 1 || v.rows() != m.rows()) throw DimMismatch("rayleigh: shape mismatch");
    const double den = v.dot(v);
    if (den == 0.0) throw ZeroVector("rayleigh: zero vector");
    return v.dot(m * v) / den;
}

EigenDecomposition sym_eigen(const DenseMatrix& m, double tol) {
    if (!m.is_square()) throw DimMismatch("sym_eigen: matrix not square");
    const int n = m.rows();
    const double fro = m.frobenius_norm();
    double asym = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) asym = std::max(asym, std::abs(m(i, j) - m(j, i)));
    if (asym > 1e-12 * (1.0 + fro)) throw NotSymmetric("sym_eigen: asymmetry exceeds tolerance");

    DenseMatrix a = m;
    DenseMatrix v = DenseMatrix::identity(n);
    const double thresh = 1e-13 * fro;
    const int max_sweeps = 100;

    auto offdiag = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    while (offdiag() > thresh) {
        if (++sweep > max_sweeps) throw NoConvergence("sym_eigen: Jacobi sweep limit exceeded");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });

    EigenDecomposition d;
    d.values.resize(n);
    d.vectors = DenseMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        d.values[k] = a(order[k], order[k]);
        for (int i = 0; i < n; ++i) d.vectors(i, k) = v(i, order[k]);
    }
    d.residual = 0.0;
    for (int k = 0; k < n; ++k) {
        const DenseMatrix vk = d.vectors.col(k);
        d.residual = std::max(d.residual, (m * vk - vk.scaled(d.values[k])).frobenius_norm());
    }
    if (fro > 0.0 && d.residual > tol * fro)
        throw NoConvergence("sym_eigen: residual above requested tolerance");
    return d;
}

}  // namespace jk
