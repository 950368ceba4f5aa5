#pragma once

// Curve catalog, measures with parameter densities, and test sets.

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "huplab/expr.hpp"
#include "huplab/quadrature.hpp"

namespace huplab {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class CurveKind {
    Circle,           // (cos t, sin t), t in [-pi, pi]
    HyperbolaBranch,  // (cosh t, sinh t), t >= 0
    HyperbolaFull,    // (cosh t, sinh t), t in R
    Spiral,           // e^{-t}(cos t, sin t), t >= 0
    AntiSpiral,       // e^{s}(cos s, sin s), s <= 0
    ExpCurve,         // (t, e^{t^2}), t in R
    Parabola,         // (t, t^2), t in R
    ParallelLines,    // one component (t, h) per height h
    Generic,          // (x(t), y(t)) from expressions on a declared domain
};

class ParamCurve {
public:
    static ParamCurve circle();
    static ParamCurve hyperbola_branch();
    static ParamCurve hyperbola_full();
    static ParamCurve spiral();
    static ParamCurve anti_spiral();
    static ParamCurve exp_curve();
    static ParamCurve parabola();
    static ParamCurve parallel_lines(std::vector<double> heights);
    /// x(t), y(t) must evaluate to real values on `domain` (a bounded interval).
    static ParamCurve generic(Expr x, Expr y, Interval domain);

    CurveKind kind() const { return kind_; }
    std::string name() const;
    std::size_t components() const;
    Interval domain(std::size_t component) const;
    const std::vector<double>& heights() const { return heights_; }

    /// Rigid translation applied after the closed-form parametrization.
    Point offset() const { return offset_; }
    ParamCurve translated(Point by) const;

    /// Throws InvalidArgument when t is outside the component's domain.
    Point point(std::size_t component, double t) const;
    /// Unchecked variant used by integrands.
    Point point_unchecked(std::size_t component, double t) const;
    Point velocity(std::size_t component, double t) const;

    /// Residual of the curve's defining identity at t (0 on the curve). Zero
    /// for kinds without a closed-form identity.
    double identity_residual(std::size_t component, double t) const;

    const Expr* x_expr() const { return x_expr_ ? &*x_expr_ : nullptr; }
    const Expr* y_expr() const { return y_expr_ ? &*y_expr_ : nullptr; }

private:
    explicit ParamCurve(CurveKind k) : kind_(k) {}

    CurveKind kind_;
    std::vector<double> heights_;
    std::optional<Expr> x_expr_, y_expr_;
    Interval generic_domain_;
    Point offset_;
};

/// Free-function form of ParamCurve::point.
Point curve_point(const ParamCurve& curve, std::size_t component, double t);

/// Piecewise-linear table of complex samples; zero outside [t.front(), t.back()].
struct Tabulated {
    std::vector<double> t;
    std::vector<cplx> values;
};

class Density {
public:
    Density(Expr e) : rep_(std::move(e)) {}  // NOLINT(google-explicit-constructor)
    Density(Tabulated table);               // NOLINT(google-explicit-constructor)
    static Density from_text(std::string_view text) { return Density(parse(text)); }

    cplx operator()(double t) const;
    /// Expression text, or "table[n]" for tabulated samples.
    std::string describe() const;
    const Expr* expr() const { return std::get_if<Expr>(&rep_); }
    const Tabulated* table() const { return std::get_if<Tabulated>(&rep_); }

private:
    std::variant<Expr, Tabulated> rep_;
};

/// Finite complex measure d mu = g_k(t) dt on each curve component.
struct Measure {
    ParamCurve curve;
    std::vector<Density> densities;  // one per component
    Envelope decay;

    /// Structural checks: one density per component, and a support-limiting
    /// envelope whenever some component has an unbounded domain.
    void validate() const;

    /// Window the density is integrated over on a component.
    Interval integration_window(std::size_t component, double abs_tol) const;
};

/// Samples |g| on the integration windows (and just outside compact supports)
/// and throws InvalidArgument if the declared envelope is violated.
void check_envelope(const Measure& mu, std::size_t samples_per_component = 2001);

/// Sum over components of the integral of |g|.
double total_variation(const Measure& mu, const QuadOpts& opts = {});

// ---------------------------------------------------------------------------
// Test sets

struct Line {
    Point point;
    Point direction;
};
struct CircleSet {
    double radius;
};
struct LatticeCross {
    double alpha;
    double beta;
};
struct CurveSet {
    ParamCurve curve;
};
struct FiberPoint {
    double xi;
    std::vector<double> etas;
};
struct FiberList {
    std::vector<FiberPoint> fibers;
    bool periodic2 = false;
};
/// R x {eta + 2k}: every horizontal line at the listed heights, optionally
/// repeated with period 2 in the second variable.
struct HorizontalLines {
    std::vector<double> etas;
    bool periodic2 = true;
};
struct PlanarSet;
struct SetUnion {
    std::vector<PlanarSet> parts;
};

struct PlanarSet {
    std::variant<Line, CircleSet, LatticeCross, CurveSet, FiberList, HorizontalLines, SetUnion> shape;

    /// Enforces alpha, beta > 0, radius > 0, nonzero line direction.
    void validate() const;
    std::string name() const;
};

PlanarSet line_set(Point point, Point direction);
PlanarSet circle_set(double radius);
PlanarSet lattice_cross(double alpha, double beta);

struct Window {
    double x0, x1, y0, y1;

    bool contains(Point p) const { return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1; }
};

/// Deterministic sample of the set inside the window. Throws InvalidArgument
/// when n == 0, the window is degenerate, or the intersection is empty.
std::vector<Point> sample_set(const PlanarSet& lambda, std::size_t n, const Window& window);

}  // namespace huplab
