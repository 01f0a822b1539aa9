#include "ldaha/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ldaha {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, CScalar(0.0)) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<CScalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw DimensionError("CMatrix: entry count does not match shape");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<CScalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_)
            throw DimensionError("CMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<CScalar> &d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

CMatrix CMatrix::block_diagonal(const std::vector<CMatrix> &blocks) {
    std::size_t r = 0, c = 0;
    for (const auto &b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    CMatrix m(r, c);
    r = c = 0;
    for (const auto &b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DimensionError("CMatrix::block: out of range");
    CMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix &b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw DimensionError("CMatrix::set_block: out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

CMatrix CMatrix::transpose() const {
    CMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

std::vector<CScalar> CMatrix::diag() const {
    std::vector<CScalar> d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = (*this)(i, i);
    return d;
}

CScalar CMatrix::trace() const {
    CScalar t = 0.0;
    for (auto x : diag())
        t += x;
    return t;
}

CMatrix mat_mul(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        std::ostringstream os;
        os << "mat_mul: " << a.rows() << "x" << a.cols() << " times " << b.rows() << "x" << b.cols();
        throw DimensionError(os.str());
    }
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const CScalar aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) { return mat_mul(a, b); }

static void require_same_shape(const CMatrix &a, const CMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(op) + ": shape mismatch");
}

CMatrix operator+(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b, "operator+");
    std::vector<CScalar> e(a.entries());
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] += b.entries()[k];
    return CMatrix(a.rows(), a.cols(), std::move(e));
}

CMatrix operator-(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b, "operator-");
    std::vector<CScalar> e(a.entries());
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] -= b.entries()[k];
    return CMatrix(a.rows(), a.cols(), std::move(e));
}

CMatrix operator*(CScalar s, const CMatrix &a) {
    std::vector<CScalar> e(a.entries());
    for (auto &x : e)
        x *= s;
    return CMatrix(a.rows(), a.cols(), std::move(e));
}

CMatrix commutator(const CMatrix &a, const CMatrix &b) { return a * b - b * a; }

double norm_inf(const CMatrix &a) {
    double m = 0.0;
    for (const auto &x : a.entries())
        m = std::max(m, std::abs(x));
    return m;
}

CMatrix mat_inverse(const CMatrix &a, Tolerance tol) {
    if (!a.square())
        throw DimensionError("mat_inverse: matrix is not square");
    const std::size_t n = a.rows();
    CMatrix m = a;
    CMatrix inv = CMatrix::identity(n);
    const double scale = norm_inf(a);
    if (scale == 0.0)
        throw IllConditionedError("mat_inverse: zero matrix", INFINITY);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(piv, col)))
                piv = r;
        if (std::abs(m(piv, col)) <= 1e-300 || std::abs(m(piv, col)) < scale * 1e-15)
            throw IllConditionedError("mat_inverse: singular matrix", INFINITY);
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(col, j), m(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        const CScalar p = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const CScalar f = m(r, col);
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }

    const double cond = scale * norm_inf(inv);
    if (!std::isfinite(cond) || cond > 1.0 / tol.rel) {
        std::ostringstream os;
        os << "mat_inverse: condition estimate " << cond << " exceeds " << 1.0 / tol.rel;
        throw IllConditionedError(os.str(), cond);
    }
    return inv;
}

Comparison approx_eq(const CMatrix &a, const CMatrix &b, Tolerance tol) {
    require_same_shape(a, b, "approx_eq");
    Comparison c;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        c.residual = std::max(c.residual, std::abs(a.entries()[k] - b.entries()[k]));
    c.scale = std::max(norm_inf(a), norm_inf(b));
    c.bound = tol.abs + tol.rel * c.scale;
    c.ok = c.residual <= c.bound;
    return c;
}

Comparison approx_eq(CScalar a, CScalar b, Tolerance tol) {
    Comparison c;
    c.residual = std::abs(a - b);
    c.scale = std::max(std::abs(a), std::abs(b));
    c.bound = tol.abs + tol.rel * c.scale;
    c.ok = c.residual <= c.bound;
    return c;
}

Comparison product_eq(const CMatrix &a, const CMatrix &b, const CMatrix &c, Tolerance tol) {
    if (a.cols() != b.rows() || c.rows() != a.rows() || c.cols() != b.cols())
        throw DimensionError("product_eq: shape mismatch");
    CMatrix lead(c.rows(), c.cols()), rest(c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            std::size_t top = 0;
            for (std::size_t k = 1; k < a.cols(); ++k)
                if (std::abs(a(i, k) * b(k, j)) > std::abs(a(i, top) * b(top, j))) top = k;
            CScalar others = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (k != top) others += a(i, k) * b(k, j);
            lead(i, j) = a(i, top) * b(top, j);
            rest(i, j) = c(i, j) - others;
        }
    return approx_eq(lead, rest, tol);
}

CScalar qpoch(CScalar a, CScalar q, std::size_t n) {
    CScalar prod = 1.0;
    CScalar aqk = a;
    for (std::size_t k = 0; k < n; ++k) {
        prod *= 1.0 - aqk;
        aqk *= q;
    }
    return prod;
}

CScalar ipow(CScalar x, int n) {
    CScalar r = 1.0;
    CScalar base = n >= 0 ? x : 1.0 / x;
    unsigned e = n >= 0 ? unsigned(n) : unsigned(-n);
    while (e) {
        if (e & 1u)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

CScalar safe_div(CScalar num, CScalar den, const char *what, double floor) {
    if (!(std::abs(den) > floor) || !std::isfinite(std::abs(den)))
        throw DegenerateError(std::string("vanishing denominator in ") + what);
    return num / den;
}

}  // namespace ldaha
