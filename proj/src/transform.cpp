#include "huplab/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "huplab/error.hpp"
#include "huplab/parallel.hpp"

namespace huplab {

namespace {

constexpr double kPi = std::numbers::pi;

// e^{-i pi phase}
cplx phase_factor(double phase) { return std::polar(1.0, -kPi * phase); }

std::optional<Envelope> envelope_of(const Measure& mu) {
    if (mu.decay.limits_support()) return mu.decay;
    return std::nullopt;
}

QuadOpts with_hint(QuadOpts opts, double omega) {
    opts.oscillation_hint = std::max(opts.oscillation_hint.value_or(0.0), omega);
    return opts;
}

double max_abs_on(Interval w, const std::function<double(double)>& f) {
    constexpr int kSamples = 1024;
    double m = 0.0;
    for (int i = 0; i <= kSamples; ++i) m = std::max(m, std::abs(f(w.lo + (w.hi - w.lo) * i / kSamples)));
    return m;
}

}  // namespace

double oscillation_scale(const ParamCurve& curve, std::size_t component, Interval window, double xi, double eta) {
    if (window.empty() || (xi == 0.0 && eta == 0.0)) return 0.0;
    double mx = 0.0, my = 0.0;
    if (xi != 0.0) mx = max_abs_on(window, [&](double t) { return curve.velocity(component, t).x; });
    if (eta != 0.0) my = max_abs_on(window, [&](double t) { return curve.velocity(component, t).y; });
    return kPi * (std::abs(xi) * mx + std::abs(eta) * my);
}

FTValue mu_hat(const Measure& mu, double xi, double eta, const QuadOpts& opts) {
    mu.validate();
    const std::optional<Envelope> env = envelope_of(mu);
    FTValue out{0.0, 0.0, {kInf, -kInf}};
    for (std::size_t c = 0; c < mu.curve.components(); ++c) {
        const Interval window = mu.integration_window(c, opts.abs_tol);
        if (window.empty()) continue;
        const Density& g = mu.densities[c];
        const ParamCurve& curve = mu.curve;
        const auto integrand = [&](double t) {
            const Point p = curve.point_unchecked(c, t);
            return phase_factor(p.x * xi + p.y * eta) * g(t);
        };
        const QuadResult r = integrate(integrand, curve.domain(c),
                                       with_hint(opts, oscillation_scale(curve, c, window, xi, eta)), env);
        out.value += r.value;
        out.err_estimate += r.err_estimate;
        out.truncation_window.lo = std::min(out.truncation_window.lo, r.window.lo);
        out.truncation_window.hi = std::max(out.truncation_window.hi, r.window.hi);
    }
    return out;
}

std::vector<FTValue> mu_hat_on_points(const Measure& mu, const std::vector<Point>& points, const QuadOpts& opts) {
    std::vector<FTValue> out(points.size());
    parallel_for(points.size(), [&](std::size_t i) { out[i] = mu_hat(mu, points[i].x, points[i].y, opts); });
    return out;
}

cplx circle_coeff(const std::function<cplx(double)>& f, int k, const QuadOpts& opts) {
    const double kd = static_cast<double>(k);
    const QuadResult r =
        integrate([&](double th) { return f(th) * std::polar(1.0, -kd * th); }, {-kPi, kPi}, with_hint(opts, std::abs(kd)));
    return r.value / (2.0 * kPi);
}

cplx lines_mu_hat(const std::array<LineTransform, 4>& fhat, int p, double xi, double eta) {
    if (p < 3) throw InvalidArgument("four-lines exponent p must be >= 3");
    const auto e = [&](double m) { return std::polar(1.0, kPi * m * eta); };
    return fhat[0](xi) + e(1.0) * fhat[1](xi) + e(2.0) * fhat[2](xi) + e(static_cast<double>(p)) * fhat[3](xi);
}

double triangle_ft(double xi) {
    if (xi == 0.0) return 1.0;
    const double h = 0.5 * kPi * xi;
    const double s = std::sin(h) / h;
    return s * s;
}

Point convolution_point(CurveKind kind, double s) {
    switch (kind) {
        case CurveKind::Spiral: return {std::exp(s) * std::cos(s), std::exp(s) * std::sin(s)};
        case CurveKind::HyperbolaBranch: return {std::cosh(s), -std::sinh(s)};
        default: throw InvalidArgument("convolution identity applies to the spiral and the hyperbola branch");
    }
}

IdentityPair convolution_identity(const Measure& mu, double s, const QuadOpts& opts) {
    mu.validate();
    const CurveKind kind = mu.curve.kind();
    const Point at = convolution_point(kind, s);
    if (mu.curve.offset() != Point{}) throw InvalidArgument("convolution identity needs an untranslated curve");

    const FTValue direct = mu_hat(mu, at.x, at.y, opts);

    const Density& g = mu.densities[0];
    const auto kernel = [kind](double u) {
        if (kind == CurveKind::Spiral) return phase_factor(std::exp(u) * std::cos(u));
        return phase_factor(std::cosh(u));
    };
    const Interval window = mu.integration_window(0, opts.abs_tol);
    const QuadResult conv = integrate([&](double t) { return kernel(s - t) * g(t); }, {0.0, kInf},
                                      with_hint(opts, oscillation_scale(mu.curve, 0, window, at.x, at.y)),
                                      envelope_of(mu));
    return {direct.value, conv.value, direct.err_estimate + conv.err_estimate};
}

IdentityPair substitution_identity(CurveKind curve, const Density& g, const Envelope& decay, double y,
                                   const QuadOpts& opts) {
    if (curve != CurveKind::ExpCurve && curve != CurveKind::HyperbolaFull)
        throw InvalidArgument("substitution identity applies to the exponential curve and the full hyperbola");
    const bool exp_curve = curve == CurveKind::ExpCurve;
    const Interval real_line{-kInf, kInf};
    const std::optional<Envelope> env = decay.limits_support() ? std::optional<Envelope>(decay) : std::nullopt;
    const Interval window = truncation_window(real_line, env, opts.abs_tol);

    const auto alpha = [exp_curve](double t) { return exp_curve ? std::exp(t * t) : std::cosh(t); };
    const auto dalpha = [exp_curve](double t) { return exp_curve ? 2.0 * t * std::exp(t * t) : std::sinh(t); };

    const double omega_t = window.empty() ? 0.0 : kPi * std::abs(y) * max_abs_on(window, dalpha);
    const QuadResult direct =
        integrate([&](double t) { return phase_factor(y * alpha(t)) * g(t); }, real_line, with_hint(opts, omega_t), env);

    IdentityPair out{direct.value, 0.0, direct.err_estimate};
    if (window.empty()) return out;

    const double reach = std::max(std::abs(window.lo), std::abs(window.hi));
    const double v_max = exp_curve ? std::sqrt(std::expm1(reach * reach)) : std::sqrt(std::cosh(reach) - 1.0);
    const auto fold = [&](double t) { return g(t) + g(-t); };

    // u = 1 + v^2 removes the 1/sqrt(u - 1) behaviour at u = 1.
    const auto substituted = [&](double v) -> cplx {
        const double v2 = v * v;
        const double u = 1.0 + v2;
        if (exp_curve) {
            const double t = std::sqrt(std::log1p(v2));
            return phase_factor(y * u) * fold(t) * (v / (u * t));
        }
        const double t = std::log1p(v2 + v * std::sqrt(2.0 + v2));
        return phase_factor(y * u) * fold(t) * (2.0 / std::sqrt(2.0 + v2));
    };
    const QuadResult sub = integrate(substituted, {0.0, v_max}, with_hint(opts, 2.0 * kPi * std::abs(y) * v_max));
    out.second = sub.value;
    out.err_estimate += sub.err_estimate;
    return out;
}

IdentityPair translation_phase_check(const Measure& mu, Point shift, double xi, double eta, const QuadOpts& opts) {
    Measure moved = mu;
    moved.curve = mu.curve.translated(shift);
    const FTValue lhs = mu_hat(moved, xi, eta, opts);
    const FTValue base = mu_hat(mu, xi, eta, opts);
    return {lhs.value, phase_factor(shift.x * xi + shift.y * eta) * base.value, lhs.err_estimate + base.err_estimate};
}

IdentityPair reflection_identity(const Measure& mu, double s, double t0, const QuadOpts& opts) {
    mu.validate();
    if (mu.curve.kind() != CurveKind::HyperbolaFull || mu.curve.offset() != Point{})
        throw InvalidArgument("reflection identity applies to the untranslated full hyperbola");
    const FTValue direct = mu_hat(mu, s * std::cosh(t0), -s * std::sinh(t0), opts);

    const Density& g = mu.densities[0];
    const Envelope moved = mu.decay.shifted(t0);
    const std::optional<Envelope> env = moved.limits_support() ? std::optional<Envelope>(moved) : std::nullopt;
    const Interval window = truncation_window({-kInf, kInf}, env, opts.abs_tol);
    const double omega =
        window.empty() ? 0.0 : kPi * std::abs(s) * max_abs_on(window, [](double t) { return std::sinh(t); });
    const QuadResult shifted = integrate([&](double t) { return phase_factor(s * std::cosh(t)) * g(t + t0); },
                                         {-kInf, kInf}, with_hint(opts, omega), env);
    return {direct.value, shifted.value, direct.err_estimate + shifted.err_estimate};
}

}  // namespace huplab
