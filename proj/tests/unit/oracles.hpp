#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace testing {

using cplx = std::complex<double>;

// H_k by summing over all multisets of size k (recursion on the first exponent).
inline cplx enumerate_h(int k, const std::vector<cplx>& v, std::size_t from = 0) {
    if (k == 0) return 1.0;
    if (from == v.size()) return 0.0;
    cplx sum = 0.0, power = 1.0;
    for (int e = 0; e <= k; ++e) {
        sum += power * enumerate_h(k - e, v, from + 1);
        power *= v[from];
    }
    return sum;
}

// Solves [1 x x^2] X = -x^p at x in {a, b, c}: Gaussian elimination with
// partial pivoting in long double. Returns {tau0, tau1, tau2}.
inline std::array<cplx, 3> dense_tau(cplx a, cplx b, cplx c, int p) {
    using C = std::complex<long double>;
    C m[3][4];
    const cplx xs[3] = {a, b, c};
    for (int r = 0; r < 3; ++r) {
        const C x(xs[r].real(), xs[r].imag());
        m[r][0] = 1.0L;
        m[r][1] = x;
        m[r][2] = x * x;
        C xp = 1.0L;
        for (int e = 0; e < p; ++e) xp *= x;
        m[r][3] = -xp;
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        for (int r = col + 1; r < 3; ++r) {
            const C f = m[r][col] / m[col][col];
            for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
        }
    }
    C x[3];
    for (int r = 2; r >= 0; --r) {
        C s = m[r][3];
        for (int k = r + 1; k < 3; ++k) s -= m[r][k] * x[k];
        x[r] = s / m[r][r];
    }
    std::array<cplx, 3> out;
    for (int k = 0; k < 3; ++k) out[k] = cplx(static_cast<double>(x[k].real()), static_cast<double>(x[k].imag()));
    return out;
}

// J_0 by its power series in plain double (fine for x < 5).
inline double j0_series(double x) {
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 60; ++m) {
        term *= -(x * x / 4.0) / (m * m);
        sum += term;
    }
    return sum;
}

// First zero of J_0 by bisection of the series on (2, 3).
inline double j01_bisection() {
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (j0_series(mid) > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace testing
