#include "huplab/bessel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "huplab/error.hpp"

namespace huplab {

namespace {

using real = long double;

real series(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0L : 0.0L;
    const real half = static_cast<real>(x) / 2;
    const real q = half * half;
    real term = std::exp(static_cast<real>(nu) * std::log(half) - std::lgamma(static_cast<real>(nu) + 1));
    real sum = term;
    for (int m = 1; m < 2000; ++m) {
        term *= -q / (static_cast<real>(m) * (static_cast<real>(m) + nu));
        sum += term;
        if (std::abs(term) <= 1e-21L * std::abs(sum) && static_cast<real>(m) > half) break;
    }
    return sum;
}

// Miller's algorithm: downward recurrence from a large even start index,
// normalized with J_0 + 2 sum_k J_{2k} = 1.
real miller(unsigned n, double x) {
    const double top = std::max(static_cast<double>(n), x);
    unsigned start = static_cast<unsigned>(top + 60.0 + 2.0 * std::sqrt(top));
    start += start % 2;
    const real xl = x;
    real above = 0.0L;
    real cur = 1e-40L;
    real norm = 0.0L;
    real result = 0.0L;
    for (unsigned k = start; k > 0; --k) {
        const real below = (2.0L * k / xl) * cur - above;
        above = cur;
        cur = below;  // now J_{k-1} up to scale
        if (k - 1 == n) result = cur;
        if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0L * cur;
        if (std::abs(cur) > 1e300L) {
            cur *= 1e-300L;
            above *= 1e-300L;
            norm *= 1e-300L;
            result *= 1e-300L;
        }
    }
    norm += cur;  // J_0
    return result / norm;
}

// J_{n+1/2}(x) = sqrt(2x/pi) j_n(x); upward recurrence is stable for n < x.
real spherical(unsigned n, double x) {
    const real xl = x;
    real jm = std::sin(xl) / xl;
    if (n == 0) return std::sqrt(2.0L * xl / std::numbers::pi_v<real>) * jm;
    real j = std::sin(xl) / (xl * xl) - std::cos(xl) / xl;
    for (unsigned k = 1; k < n; ++k) {
        const real next = static_cast<real>(2 * k + 1) / xl * j - jm;
        jm = j;
        j = next;
    }
    return std::sqrt(2.0L * xl / std::numbers::pi_v<real>) * j;
}

}  // namespace

double bessel_j(Order nu, double x) {
    if (!(x >= 0.0)) throw InvalidArgument("bessel_j requires x >= 0");
    if (!std::isfinite(x)) throw InvalidArgument("bessel_j requires finite x");
    const double v = nu.value();
    if (x <= std::max(12.0, v)) return static_cast<double>(series(v, x));
    if (nu.is_integer()) return static_cast<double>(miller(nu.twice_nu() / 2, x));
    return static_cast<double>(spherical(nu.twice_nu() / 2, x));
}

double bessel_zero(Order nu, int n) {
    if (n < 1) throw InvalidArgument("bessel_zero index must be >= 1");
    const double step = std::numbers::pi / 4.0;
    double a = std::max(nu.value(), 0.5);
    double fa = bessel_j(nu, a);
    int found = 0;
    // Consecutive zeros are more than pi/4 apart, so each step brackets at most one.
    for (int iter = 0; iter < 1000000; ++iter) {
        const double b = a + step;
        const double fb = bessel_j(nu, b);
        if (fa == 0.0) {
            if (++found == n) return a;
        } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
            if (++found == n) {
                double lo = a, hi = b, flo = fa;
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (!(lo < mid && mid < hi)) break;
                    const double fm = bessel_j(nu, mid);
                    if (fm == 0.0) return mid;
                    if ((fm < 0.0) == (flo < 0.0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                return std::abs(bessel_j(nu, lo)) <= std::abs(bessel_j(nu, hi)) ? lo : hi;
            }
        }
        a = b;
        fa = fb;
    }
    throw NumericError("bessel_zero: no bracket found for zero " + std::to_string(n));
}

NonzeroReport check_orders_nonzero(double x, const OrderFamily& family) {
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("order check requires finite x > 0");
    unsigned twice = 0;
    if (const auto* half = std::get_if<EvenHalfIntegers>(&family)) {
        if (half->dimension < 2) throw InvalidArgument("sphere dimension must be >= 2");
        twice = static_cast<unsigned>(half->dimension - 2);
    }
    NonzeroReport report;
    const double limit = std::ceil(x);
    for (Order nu(twice); nu.value() <= limit; nu = Order(nu.twice_nu() + 2)) {
        if (nu.value() >= x) continue;
        report.checked.push_back(nu);
        if (std::abs(bessel_j(nu, x)) <= kBesselZeroThreshold) {
            report.all_nonzero = false;
            report.vanishing = nu;
            break;
        }
    }
    return report;
}

bool all_orders_nonzero(double x, const OrderFamily& family) { return check_orders_nonzero(x, family).all_nonzero; }

}  // namespace huplab
