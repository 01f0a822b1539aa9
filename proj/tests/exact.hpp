#pragma once

// Exact rational arithmetic used as an independent oracle for values at the
// desk point, where every seed parameter is rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>

namespace exact {

using Q = boost::multiprecision::cpp_rational;

inline Q pow(Q x, int n) {
    if (n < 0)
        return pow(Q(1) / x, -n);
    Q r = 1;
    while (n-- > 0)
        r *= x;
    return r;
}

inline double to_double(const Q &x) { return x.convert_to<double>(); }

inline std::complex<double> to_c(const Q &x) { return {to_double(x), 0.0}; }

// The desk point: d=4, q=1/2, s=5, s*=3, r1=2/3, r2=s s* q^{d+1}/r1.
struct Desk {
    int d = 4;
    Q q{1, 2}, s{5}, ss{3}, r1{2, 3};
    Q r2 = s * ss * pow(q, d + 1) / r1;
};

}  // namespace exact
