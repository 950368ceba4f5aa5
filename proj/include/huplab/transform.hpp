#pragma once

// Fourier transform of measures on curves under the convention
//
//     mu^(xi, eta) = integral of exp(-i pi (x xi + y eta)) d mu(x, y),
//
// plus the numeric identities behind the curve results: convolution on the
// spiral and hyperbola branch, the u = alpha(t) substitution, translation
// phases, and the reflected-line identity on the full hyperbola.

#include <array>
#include <functional>
#include <vector>

#include "huplab/geometry.hpp"
#include "huplab/quadrature.hpp"

namespace huplab {

struct FTValue {
    cplx value;
    double err_estimate = 0.0;
    Interval truncation_window;  // hull of the windows integrated per component
};

/// pi * (|xi| max|x'| + |eta| max|y'|) over the window.
double oscillation_scale(const ParamCurve& curve, std::size_t component, Interval window, double xi, double eta);

FTValue mu_hat(const Measure& mu, double xi, double eta, const QuadOpts& opts = {});

/// mu_hat at each point, evaluated in parallel; output order matches input.
std::vector<FTValue> mu_hat_on_points(const Measure& mu, const std::vector<Point>& points, const QuadOpts& opts = {});

/// (1/2pi) * integral over [-pi, pi] of f(theta) e^{-ik theta}.
cplx circle_coeff(const std::function<cplx(double)>& f, int k, const QuadOpts& opts = {});

/// f0^(xi) + e^{pi i eta} f1^(xi) + e^{2 pi i eta} f2^(xi) + e^{p pi i eta} f3^(xi).
using LineTransform = std::function<cplx(double)>;
cplx lines_mu_hat(const std::array<LineTransform, 4>& fhat, int p, double xi, double eta);

/// Transform of the triangle max(0, 1 - |x|): (sin(pi xi / 2) / (pi xi / 2))^2.
double triangle_ft(double xi);

struct IdentityPair {
    cplx first;   // direct evaluation of mu^
    cplx second;  // the rewritten integral
    double err_estimate = 0.0;
};

/// Spiral: mu^ at (e^s cos s, e^s sin s) against int_0^inf e^{-i pi e^{s-t} cos(s-t)} g(t) dt.
/// Hyperbola branch: mu^ at (cosh s, -sinh s) against int_0^inf e^{-i pi cosh(s-t)} g(t) dt.
IdentityPair convolution_identity(const Measure& mu, double s, const QuadOpts& opts = {});

/// Lambda point where the convolution identity evaluates mu^.
Point convolution_point(CurveKind kind, double s);

/// Integral over R of e^{-i pi y alpha(t)} g(t) with alpha = e^{t^2} (ExpCurve)
/// or cosh t (HyperbolaFull), against its u = alpha(t) form over [1, inf)
/// with F(t) = g(t) + g(-t). The substituted side uses u = 1 + v^2.
IdentityPair substitution_identity(CurveKind curve, const Density& g, const Envelope& decay, double y,
                                   const QuadOpts& opts = {});

/// mu^ of the translated measure against e^{-i pi <u0, (xi, eta)>} mu^.
IdentityPair translation_phase_check(const Measure& mu, Point shift, double xi, double eta, const QuadOpts& opts = {});

/// Full hyperbola: mu^ at (s cosh t0, -s sinh t0) against int e^{-i pi s cosh t} g(t + t0) dt.
IdentityPair reflection_identity(const Measure& mu, double s, double t0, const QuadOpts& opts = {});

}  // namespace huplab
