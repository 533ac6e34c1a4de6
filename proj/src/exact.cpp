#include "jk/exact.hpp"

#include <cmath>

namespace jk {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols) throw BadLength("rational entry count mismatch");
    for (auto& q : e_) q.canonicalize();
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_int_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    RationalMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw BadLength("ragged row list");
        int j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

RationalMatrix RationalMatrix::from_dense(const DenseMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const double x = m(i, j);
            if (std::rint(x) != x || std::abs(x) > 9.0e15)
                throw NotRational("matrix entry is not an exactly representable integer");
            r(i, j) = Rational(static_cast<long>(x));
        }
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("rational add: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("rational sub: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw DimMismatch("rational mul: inner dimension mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
    RationalMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = s * e_[k];
    return r;
}

RationalMatrix RationalMatrix::block(int r0, int c0, int nr, int nc) const {
    RationalMatrix r(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RationalMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

DenseMatrix RationalMatrix::to_dense() const {
    DenseMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).get_d();
    return m;
}

Rational exact_rayleigh(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& w) {
    if (a.rows() != w.rows() || b.rows() != w.rows()) throw DimMismatch("exact_rayleigh: dimension mismatch");
    // vec(W)ᵀ(A⊗B)vec(W) = trace(Wᵀ B W Aᵀ)
    const RationalMatrix num_m = w.transpose() * b * w * a.transpose();
    Rational num(0), den(0);
    for (int i = 0; i < num_m.rows(); ++i) num += num_m(i, i);
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j) den += w(i, j) * w(i, j);
    if (den == 0) throw ZeroVector("exact_rayleigh: zero vector");
    Rational r = num / den;
    r.canonicalize();
    return r;
}

namespace {

// Free lower-triangle slots of an n×n symmetric matrix, column-major.
std::vector<std::pair<int, int>> lower_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int c = 0; c < n; ++c)
        for (int r = c; r < n; ++r) slots.emplace_back(r, c);
    return slots;
}

// trace(S_p B S_q A) for slot basis matrices S = E_rc (+ E_cr if off-diagonal).
Rational slot_trace_form(const RationalMatrix& a, const RationalMatrix& b, std::pair<int, int> p,
                         std::pair<int, int> q) {
    auto term = [&](int i, int j, int k, int l) {
        // trace(E_ij B E_kl A) = B(j,k) A(l,i)
        return b(j, k) * a(l, i);
    };
    Rational s(0);
    const auto [pr, pc] = p;
    const auto [qr, qc] = q;
    for (auto [i, j] : pr == pc ? std::vector<std::pair<int, int>>{{pr, pc}}
                                : std::vector<std::pair<int, int>>{{pr, pc}, {pc, pr}})
        for (auto [k, l] : qr == qc ? std::vector<std::pair<int, int>>{{qr, qc}}
                                    : std::vector<std::pair<int, int>>{{qr, qc}, {qc, qr}})
            s += term(i, j, k, l);
    return s;
}

}  // namespace

RationalMatrix compress_shifted_form(const RationalMatrix& a, const RationalMatrix& b, const Rational& shift) {
    if (!a.is_symmetric() || !b.is_symmetric()) throw NotSymmetric("compress_shifted_form: pair must be symmetric");
    const int n = a.rows();
    const auto slots = lower_slots(n);
    const int d = static_cast<int>(slots.size());
    RationalMatrix h(d, d);
    for (int p = 0; p < d; ++p)
        for (int q = p; q < d; ++q) {
            Rational g = slot_trace_form(a, b, slots[p], slots[q]);
            if (p == q) {
                // shift · trace(S_p²): 1 for diagonal slots, 2 for off-diagonal slots
                g += shift * (slots[p].first == slots[p].second ? 1 : 2);
            }
            h(p, q) = 2 * g;
            h(q, p) = h(p, q);
        }
    return h;
}

RationalMatrix shifted_gram_form(const RationalMatrix& a, const RationalMatrix& b, const Rational& shift) {
    if (!a.is_symmetric() || !b.is_symmetric()) throw NotSymmetric("shifted_gram_form: pair must be symmetric");
    const int n = a.rows();
    const auto slots = lower_slots(n);
    const int d = static_cast<int>(slots.size());
    RationalMatrix h(d, d);
    for (int p = 0; p < d; ++p)
        for (int q = p; q < d; ++q) {
            h(p, q) = slot_trace_form(a, b, slots[p], slots[q]);
            if (p == q) h(p, q) += 2 * shift;
            h(q, p) = h(p, q);
        }
    return h;
}

PDCertificate exact_pd(const RationalMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric("exact_pd: matrix not symmetric");
    const int n = m.rows();
    PDCertificate cert;
    cert.positive_definite = true;

    // symmetric (LDLᵀ) elimination without permutation; pivots are minor ratios
    RationalMatrix a = m;
    RationalMatrix l = RationalMatrix::identity(n);  // unit lower triangular, filled as we go
    for (int k = 0; k < n; ++k) {
        const Rational piv = a(k, k);
        cert.pivots.push_back(piv);
        if (piv <= 0) {
            cert.positive_definite = false;
            // witness: x with Lᵀx = e_k restricted to the leading k+1 coordinates,
            // so xᵀMx = pivot ≤ 0
            std::vector<Rational> x(n, Rational(0));
            x[k] = 1;
            for (int i = k - 1; i >= 0; --i) {
                Rational s(0);
                for (int j = i + 1; j <= k; ++j) s += l(j, i) * x[j];
                x[i] = -s;
            }
            cert.witness = std::move(x);
            return cert;
        }
        for (int i = k + 1; i < n; ++i) {
            const Rational f = a(i, k) / piv;
            l(i, k) = f;
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return cert;
}

Rational leading_minor(const RationalMatrix& m, int k) {
    const PDCertificate c = exact_pd(m.block(0, 0, k, k));
    Rational d(1);
    if (static_cast<int>(c.pivots.size()) < k)
        throw LeadingBlockSingularOrNotPD("leading_minor: elimination broke down");
    for (const Rational& p : c.pivots) d *= p;
    return d;
}

RationalMatrix exact_schur(const RationalMatrix& m, int split) {
    if (!m.is_symmetric()) throw NotSymmetric("exact_schur: matrix not symmetric");
    const int n = m.rows();
    if (split <= 0 || split >= n) throw DimMismatch("exact_schur: bad split index");
    const RationalMatrix x = m.block(0, 0, split, split);
    const PDCertificate cx = exact_pd(x);
    if (!cx.positive_definite) throw LeadingBlockSingularOrNotPD("exact_schur: leading block not PD");

    const RationalMatrix y = m.block(0, split, split, n - split);
    const RationalMatrix z = m.block(split, split, n - split, n - split);

    // solve X · W = Y by exact Gaussian elimination (X is PD, no pivoting needed)
    RationalMatrix aug = x;
    RationalMatrix rhs = y;
    for (int k = 0; k < split; ++k) {
        const Rational piv = aug(k, k);
        for (int i = k + 1; i < split; ++i) {
            const Rational f = aug(i, k) / piv;
            for (int j = k; j < split; ++j) aug(i, j) -= f * aug(k, j);
            for (int j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(k, j);
        }
    }
    RationalMatrix w(split, y.cols());
    for (int i = split - 1; i >= 0; --i)
        for (int j = 0; j < y.cols(); ++j) {
            Rational s = rhs(i, j);
            for (int k = i + 1; k < split; ++k) s -= aug(i, k) * w(k, j);
            w(i, j) = s / aug(i, i);
        }
    return z - y.transpose() * w;
}

bool diag_dominant(const RationalMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric("diag_dominant: matrix not symmetric");
    for (int i = 0; i < m.rows(); ++i) {
        Rational off(0);
        for (int j = 0; j < m.cols(); ++j)
            if (j != i) off += abs(m(i, j));
        if (m(i, i) <= off) return false;
    }
    return true;
}

CounterexampleCertificate certify_skew_extremal(const std::string& pair_id, const RationalMatrix& a,
                                                const RationalMatrix& b, const RationalMatrix& w,
                                                const Rational& shift) {
    CounterexampleCertificate cert;
    cert.pair_id = pair_id;
    cert.even_lower_bound = -shift;
    if (!a.is_symmetric() || !b.is_symmetric()) throw NotSymmetric("certify_skew_extremal: pair must be symmetric");
    if (!w.is_skew_symmetric()) throw NotSymmetric("certify_skew_extremal: witness must be skew-symmetric");

    cert.skew_rayleigh = exact_rayleigh(a, b, w);
    if (!(cert.skew_rayleigh < -shift)) {
        cert.failed_stage = "skew_rayleigh";
        return cert;
    }
    cert.pd_evidence = exact_pd(compress_shifted_form(a, b, shift));
    if (!cert.pd_evidence.positive_definite) {
        cert.failed_stage = "pd_evidence";
        return cert;
    }
    cert.min_eigvec_skew = true;
    return cert;
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

}  // namespace jk
