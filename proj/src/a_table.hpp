#pragma once

// The q-explicit coefficient table of A on the C vectors, generic in the
// scalar type so it can be evaluated in double and in extended precision.

namespace ldaha::detail {

// Calls set(row, col, value) for every nonzero entry of [A]_C (2d x 2d).
// k is the diagonal constant (theta_0).
template <class T, class Set>
void a_table_C(int d, const T &q, const T &ss, const T &r1, const T &r2, const T &h, const T &k, Set set) {
    const T one(1);
    auto Q = [&](int n) {
        T r = one;
        for (int j = 0; j < (n < 0 ? -n : n); ++j) r *= q;
        return n < 0 ? T(one / r) : r;
    };
    auto den = [&](int n) { return T(one - ss * Q(n)); };
    auto b = [&](int i) {
        return T(h * (one - Q(i - d)) * (one - ss * Q(i + 1)) * (one - r1 * Q(i + 1)) * (one - r2 * Q(i + 1)) /
                 (den(2 * i + 1) * den(2 * i + 2)));
    };
    auto c = [&](int i) {
        return T(h * (one - Q(i)) * (one - ss * Q(i + d + 1)) * (r1 - ss * Q(i)) * (r2 - ss * Q(i)) /
                 (ss * Q(d) * den(2 * i) * den(2 * i + 1)));
    };
    auto bt = [&](int i) {
        return T(h * (one - Q(i + 1 - d)) * (one - ss * Q(i + 2)) * (one - r1 * Q(i + 1)) * (one - r2 * Q(i + 1)) /
                 (den(2 * i + 2) * den(2 * i + 3)));
    };
    auto ct = [&](int i) {
        return T(h * (one - Q(i)) * (one - ss * Q(i + d + 1)) * (r1 - ss * Q(i + 1)) * (r2 - ss * Q(i + 1)) /
                 (ss * Q(d) * den(2 * i + 1) * den(2 * i + 2)));
    };
    for (int i = 0; i < d; ++i) {
        const int mi = 2 * i, pi = 2 * i + 1;
        // A Ci-
        if (i >= 1) {
            set(mi - 2, mi, bt(i - 1));
            set(mi - 1, mi, T(bt(i - 1) - b(i)));
        }
        set(mi, mi, T(k - ct(i) - b(i)));
        set(pi, mi, T(c(i + 1) - ct(i)));
        if (i + 1 < d) set(mi + 2, mi, c(i + 1));
        // A Ci+
        if (i >= 1) set(mi - 1, pi, b(i));
        set(mi, pi, T(b(i) - bt(i)));
        set(pi, pi, T(k - bt(i) - c(i + 1)));
        if (i + 1 < d) {
            set(mi + 2, pi, T(ct(i + 1) - c(i + 1)));
            set(pi + 2, pi, ct(i + 1));
        }
    }
}

}  // namespace ldaha::detail
