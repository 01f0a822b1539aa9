#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldaha {

using CScalar = std::complex<double>;

struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;
};

class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a closed form hits a vanishing denominator.
class DegenerateError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class IllConditionedError : public std::runtime_error {
  public:
    IllConditionedError(const std::string &msg, double cond)
        : std::runtime_error(msg), condition(cond) {}
    double condition;
};

// Dense row-major complex matrix. Sizes here never exceed a few dozen.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<CScalar> entries);
    CMatrix(std::initializer_list<std::initializer_list<CScalar>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const std::vector<CScalar> &d);
    static CMatrix block_diagonal(const std::vector<CMatrix> &blocks);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const std::vector<CScalar> &entries() const { return data_; }

    CScalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CScalar &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const CMatrix &b);
    CMatrix transpose() const;
    std::vector<CScalar> diag() const;
    CScalar trace() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CScalar> data_;
};

CMatrix mat_mul(const CMatrix &a, const CMatrix &b);
CMatrix operator*(const CMatrix &a, const CMatrix &b);
CMatrix operator+(const CMatrix &a, const CMatrix &b);
CMatrix operator-(const CMatrix &a, const CMatrix &b);
CMatrix operator*(CScalar s, const CMatrix &a);
CMatrix commutator(const CMatrix &a, const CMatrix &b);

// Max absolute entry.
double norm_inf(const CMatrix &a);

CMatrix mat_inverse(const CMatrix &a, Tolerance tol = {});

struct Comparison {
    bool ok = false;
    double residual = 0.0;  // max |a_ij - b_ij|
    double scale = 0.0;     // max(norm_inf(a), norm_inf(b))
    double bound = 0.0;     // abs + rel * scale
    // Set by distinctness tests, where residual is the smallest separation and
    // must exceed the bound instead of staying below it.
    bool separation = false;
    double relative() const { return scale > 0.0 ? residual / scale : residual; }
};

// One named identity check, as reported by the verification suite.
struct Check {
    std::string name;
    Comparison cmp;
};

// Passes iff max|a_ij - b_ij| <= tol.abs + tol.rel * max(norm_inf(a), norm_inf(b)).
Comparison approx_eq(const CMatrix &a, const CMatrix &b, Tolerance tol = {});

// Residual of a scalar identity measured on the same scale-aware rule.
Comparison approx_eq(CScalar a, CScalar b, Tolerance tol = {});

// a * b = c entrywise, each entry written two-sided as (its largest term
// a_ik b_kj) = c_ij - (the other terms), then compared by the matrix rule.
// The bound tracks the size of the terms being summed instead of c, which
// can be far smaller when the product cancels.
Comparison product_eq(const CMatrix &a, const CMatrix &b, const CMatrix &c, Tolerance tol = {});

// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}).
CScalar qpoch(CScalar a, CScalar q, std::size_t n);

// Integer power that also accepts negative exponents.
CScalar ipow(CScalar x, int n);

// Returns num/den, or throws DegenerateError naming `what` when den is tiny.
CScalar safe_div(CScalar num, CScalar den, const char *what, double floor = 1e-300);

}  // namespace ldaha
