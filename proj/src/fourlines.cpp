#include "huplab/fourlines.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "huplab/error.hpp"

namespace huplab {

namespace {

constexpr double kDegenerateDet = 1e-12;
constexpr double kLiftInputTol = 1e-10;
constexpr double kLiftOutputTol = 1e-9;

std::vector<cplx> powers(cplx x, int n) {
    std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
    out[0] = 1.0;
    for (int i = 1; i <= n; ++i) out[i] = out[i - 1] * x;
    return out;
}

void check_p(int p) {
    if (p < 3 || p > kMaxLinesExponent)
        throw InvalidArgument("four-lines exponent p must lie in [3, " + std::to_string(kMaxLinesExponent) + "]");
}

}  // namespace

double wrap2(double eta) {
    if (!std::isfinite(eta)) throw InvalidArgument("eta must be finite");
    double r = std::fmod(eta, 2.0);
    if (r < 0.0) r += 2.0;
    if (r >= 2.0) r = 0.0;
    return r;
}

UnitPoint UnitPoint::at(double eta) {
    const double e = wrap2(eta);
    return {e, std::polar(1.0, std::numbers::pi * e)};
}

void Fiber::validate() const {
    if (!std::isfinite(xi)) throw InvalidArgument("fiber xi must be finite");
    if (sigma.empty()) throw InvalidArgument("fiber has no points");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!(sigma[i] >= 0.0 && sigma[i] < 2.0)) throw InvalidArgument("fiber eta outside [0, 2)");
        if (i > 0 && !(sigma[i] - sigma[i - 1] > kFiberSeparation))
            throw InvalidArgument("fiber etas must be sorted and distinct");
    }
    if (sigma.size() > 1 && sigma.front() + 2.0 - sigma.back() <= kFiberSeparation)
        throw InvalidArgument("fiber etas coincide modulo 2");
}

void FourLinesConfig::validate() const { check_p(p); }

std::string to_string(FiberClass c) {
    switch (c) {
        case FiberClass::P1: return "P1";
        case FiberClass::P2: return "P2";
        case FiberClass::P3: return "P3";
        case FiberClass::P4: return "P4";
    }
    return "?";
}

cplx homog_sym(int k, const std::vector<cplx>& vals) {
    if (k < 0) throw InvalidArgument("homog_sym needs k >= 0");
    if (vals.empty()) throw InvalidArgument("homog_sym needs at least one value");
    const std::size_t n = vals.size();
    // Elementary symmetric polynomials e_0..e_n.
    std::vector<cplx> e(n + 1, 0.0);
    e[0] = 1.0;
    for (const cplx& v : vals)
        for (std::size_t i = n; i >= 1; --i) e[i] += v * e[i - 1];

    std::vector<cplx> h(static_cast<std::size_t>(k) + 1, 0.0);
    h[0] = 1.0;
    for (int m = 1; m <= k; ++m) {
        cplx s = 0.0;
        for (std::size_t i = 1; i <= std::min<std::size_t>(n, m); ++i) {
            const cplx term = e[i] * h[m - i];
            s += (i % 2 == 1) ? term : -term;
        }
        h[m] = s;
    }
    return h[k];
}

cplx vandermonde3_det(cplx a, cplx b, cplx c) { return (a - b) * (b - c) * (c - a); }

std::array<cplx, 3> solve_tau(cplx a, cplx b, cplx c, int p) {
    check_p(p);
    if (std::abs(vandermonde3_det(a, b, c)) <= kDegenerateDet) throw InvalidArgument("near-degenerate triple");
    const std::vector<cplx> abc{a, b, c};
    const auto pa = powers(a, p), pb = powers(b, p), pc = powers(c, p);

    cplx constrained = 0.0;  // sum over l + m + n = p - 1 with l, m, n >= 1
    for (int l = 1; l <= p - 3; ++l)
        for (int m = 1; l + m <= p - 2; ++m) constrained += pa[l] * pb[m] * pc[p - 1 - l - m];

    const cplx tau0 = -a * b * c * homog_sym(p - 3, abc);
    const cplx tau1 = homog_sym(p - 1, abc) - (pa[p - 1] + pb[p - 1] + pc[p - 1]) + constrained;
    const cplx tau2 = -homog_sym(p - 2, abc);
    return {tau0, tau1, tau2};
}

std::array<cplx, 2> solve_delta(cplx chi0, cplx chi1) {
    if (std::abs(chi0 - chi1) <= kFiberSeparation) throw InvalidArgument("coincident points");
    return {chi0 * chi1, -(chi0 + chi1)};
}

std::array<cplx, 3> solve_e(cplx a, cplx b, cplx c) {
    if (std::abs(vandermonde3_det(a, b, c)) <= kDegenerateDet) throw InvalidArgument("degenerate triple");
    return {-a * b * c, a * b + b * c + c * a, -(a + b + c)};
}

cplx rho(cplx a, cplx b, cplx c) {
    const cplx s = a * a * a * (b - c) + b * b * b * (c - a) + c * c * c * (a - b);
    return s * s;
}

double delta_bound(const UnitPoint& chi0, const UnitPoint& chi1) {
    if (std::abs(chi0.eta - chi1.eta) <= kFiberSeparation) throw InvalidArgument("coincident points");
    return std::abs(chi0.a + chi1.a);
}

Classification classify(const Fiber& fiber, const FourLinesConfig& cfg) {
    fiber.validate();
    cfg.validate();
    const std::vector<double>& s = fiber.sigma;
    const std::size_t n = s.size();
    if (n == 1) return {FiberClass::P1, s};
    if (n == 2) return {FiberClass::P2, s};

    std::vector<cplx> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = UnitPoint::at(s[i]).a;

    // Ordered 4-tuples in lexicographic order; the first witness wins.
    std::vector<cplx> h(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j) h[k] = homog_sym(cfg.p - 2, {a[i], a[j], a[k]});
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                for (std::size_t l = 0; l < n; ++l) {
                    if (l == i || l == j || l == k) continue;
                    if (std::abs(h[k] - h[l]) > kWitnessTolerance) return {FiberClass::P4, {s[i], s[j], s[k], s[l]}};
                }
            }
        }
    }
    return {FiberClass::P3, {}};
}

std::vector<Fiber> periodize(const std::vector<Point>& points) {
    std::map<double, std::vector<double>> groups;
    for (const Point& p : points) {
        if (!std::isfinite(p.x)) throw InvalidArgument("xi must be finite");
        groups[p.x].push_back(wrap2(p.y));
    }
    std::vector<Fiber> out;
    out.reserve(groups.size());
    for (auto& [xi, etas] : groups) {
        std::sort(etas.begin(), etas.end());
        std::vector<double> kept;
        for (double e : etas)
            if (kept.empty() || e - kept.back() > kFiberSeparation) kept.push_back(e);
        // Points just below 2 coincide with points at 0.
        while (kept.size() > 1 && kept.front() + 2.0 - kept.back() <= kFiberSeparation) kept.pop_back();
        out.push_back({xi, std::move(kept)});
    }
    return out;
}

double Relation::residual(const std::vector<cplx>& psi) const {
    const std::size_t d = coeffs.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        cplx pw = 1.0;
        cplx sum = 0.0;
        double scale = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            const cplx term = coeffs[j][i] * pw;
            sum += term;
            scale += std::abs(term);
            pw *= psi[i];
        }
        sum += pw;
        scale += std::abs(pw);
        worst = std::max(worst, std::abs(sum) / std::max(1.0, scale));
    }
    return worst;
}

Relation lift_relation(const std::vector<cplx>& psi, const Relation& rel, const std::vector<cplx>& f0hat) {
    const std::size_t n = psi.size();
    const std::size_t d = rel.coeffs.size();
    if (d == 0) throw InvalidArgument("relation has degree 0");
    if (f0hat.size() != n) throw InvalidArgument("f0hat must be sampled on the same grid as psi");
    for (const auto& c : rel.coeffs)
        if (c.size() != n) throw InvalidArgument("coefficients must be sampled on the same grid as psi");
    const double in = rel.residual(psi);
    if (!(in < kLiftInputTol)) throw InvalidArgument("input relation violated (residual " + std::to_string(in) + ")");

    // (psi + f0)(psi^d + sum c_j psi^j): new c_j = c_{j-1} + f0 c_j with c_d = 1, c_{-1} = 0.
    Relation out;
    out.coeffs.assign(d + 1, std::vector<cplx>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= d; ++j) {
            const cplx cj = j < d ? rel.coeffs[j][i] : cplx(1.0);
            const cplx prev = j > 0 ? rel.coeffs[j - 1][i] : cplx(0.0);
            out.coeffs[j][i] = prev + f0hat[i] * cj;
        }
    }
    const double res = out.residual(psi);
    if (!(res < kLiftOutputTol)) throw NumericError("lifted relation residual " + std::to_string(res));
    return out;
}

}  // namespace huplab
