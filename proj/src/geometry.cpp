#include "huplab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "huplab/error.hpp"

namespace huplab {

namespace {

constexpr double kPi = std::numbers::pi;

double real_value(const Expr& e, double t, const char* what) {
    const cplx v = e.eval(t);
    if (v.imag() != 0.0) throw DomainError(std::string(what) + " coordinate is not real", e.to_string());
    return v.real();
}

}  // namespace

ParamCurve ParamCurve::circle() { return ParamCurve(CurveKind::Circle); }
ParamCurve ParamCurve::hyperbola_branch() { return ParamCurve(CurveKind::HyperbolaBranch); }
ParamCurve ParamCurve::hyperbola_full() { return ParamCurve(CurveKind::HyperbolaFull); }
ParamCurve ParamCurve::spiral() { return ParamCurve(CurveKind::Spiral); }
ParamCurve ParamCurve::anti_spiral() { return ParamCurve(CurveKind::AntiSpiral); }
ParamCurve ParamCurve::exp_curve() { return ParamCurve(CurveKind::ExpCurve); }
ParamCurve ParamCurve::parabola() { return ParamCurve(CurveKind::Parabola); }

ParamCurve ParamCurve::parallel_lines(std::vector<double> heights) {
    if (heights.empty()) throw InvalidArgument("parallel lines need at least one height");
    for (double h : heights)
        if (!std::isfinite(h)) throw InvalidArgument("line heights must be finite");
    ParamCurve c(CurveKind::ParallelLines);
    c.heights_ = std::move(heights);
    return c;
}

ParamCurve ParamCurve::generic(Expr x, Expr y, Interval domain) {
    if (!domain.bounded() || domain.empty()) throw InvalidArgument("generic curve needs a bounded, nonempty domain");
    ParamCurve c(CurveKind::Generic);
    c.x_expr_ = std::move(x);
    c.y_expr_ = std::move(y);
    c.generic_domain_ = domain;
    return c;
}

std::string ParamCurve::name() const {
    switch (kind_) {
        case CurveKind::Circle: return "circle";
        case CurveKind::HyperbolaBranch: return "hyperbola-branch";
        case CurveKind::HyperbolaFull: return "hyperbola-full";
        case CurveKind::Spiral: return "spiral";
        case CurveKind::AntiSpiral: return "anti-spiral";
        case CurveKind::ExpCurve: return "exp-curve";
        case CurveKind::Parabola: return "parabola";
        case CurveKind::ParallelLines: return "parallel-lines";
        case CurveKind::Generic: return "expr";
    }
    return "?";
}

std::size_t ParamCurve::components() const {
    return kind_ == CurveKind::ParallelLines ? heights_.size() : 1;
}

Interval ParamCurve::domain(std::size_t component) const {
    if (component >= components()) throw InvalidArgument("curve component index out of range");
    switch (kind_) {
        case CurveKind::Circle: return {-kPi, kPi};
        case CurveKind::HyperbolaBranch:
        case CurveKind::Spiral: return {0.0, kInf};
        case CurveKind::AntiSpiral: return {-kInf, 0.0};
        case CurveKind::HyperbolaFull:
        case CurveKind::ExpCurve:
        case CurveKind::Parabola:
        case CurveKind::ParallelLines: return {-kInf, kInf};
        case CurveKind::Generic: return generic_domain_;
    }
    return {-kInf, kInf};
}

ParamCurve ParamCurve::translated(Point by) const {
    ParamCurve c = *this;
    c.offset_ = {offset_.x + by.x, offset_.y + by.y};
    return c;
}

Point ParamCurve::point(std::size_t component, double t) const {
    if (!domain(component).contains(t))
        throw InvalidArgument("parameter " + std::to_string(t) + " outside the domain of " + name());
    return point_unchecked(component, t);
}

Point ParamCurve::point_unchecked(std::size_t component, double t) const {
    Point p;
    switch (kind_) {
        case CurveKind::Circle: p = {std::cos(t), std::sin(t)}; break;
        case CurveKind::HyperbolaBranch:
        case CurveKind::HyperbolaFull: p = {std::cosh(t), std::sinh(t)}; break;
        case CurveKind::Spiral: {
            const double r = std::exp(-t);
            p = {r * std::cos(t), r * std::sin(t)};
            break;
        }
        case CurveKind::AntiSpiral: {
            const double r = std::exp(t);
            p = {r * std::cos(t), r * std::sin(t)};
            break;
        }
        case CurveKind::ExpCurve: p = {t, std::exp(t * t)}; break;
        case CurveKind::Parabola: p = {t, t * t}; break;
        case CurveKind::ParallelLines: p = {t, heights_[component]}; break;
        case CurveKind::Generic: p = {real_value(*x_expr_, t, "x"), real_value(*y_expr_, t, "y")}; break;
    }
    return {p.x + offset_.x, p.y + offset_.y};
}

Point ParamCurve::velocity(std::size_t component, double t) const {
    switch (kind_) {
        case CurveKind::Circle: return {-std::sin(t), std::cos(t)};
        case CurveKind::HyperbolaBranch:
        case CurveKind::HyperbolaFull: return {std::sinh(t), std::cosh(t)};
        case CurveKind::Spiral: {
            const double r = std::exp(-t);
            return {-r * (std::cos(t) + std::sin(t)), r * (std::cos(t) - std::sin(t))};
        }
        case CurveKind::AntiSpiral: {
            const double r = std::exp(t);
            return {r * (std::cos(t) - std::sin(t)), r * (std::sin(t) + std::cos(t))};
        }
        case CurveKind::ExpCurve: return {1.0, 2.0 * t * std::exp(t * t)};
        case CurveKind::Parabola: return {1.0, 2.0 * t};
        case CurveKind::ParallelLines: return {1.0, 0.0};
        case CurveKind::Generic: {
            const double h = 1e-6 * std::max(1.0, std::abs(t));
            const Point a = point_unchecked(component, t - h);
            const Point b = point_unchecked(component, t + h);
            return {(b.x - a.x) / (2 * h), (b.y - a.y) / (2 * h)};
        }
    }
    return {};
}

double ParamCurve::identity_residual(std::size_t component, double t) const {
    const Point q = point(component, t);
    const double x = q.x - offset_.x;
    const double y = q.y - offset_.y;
    switch (kind_) {
        case CurveKind::Circle: return x * x + y * y - 1.0;
        case CurveKind::HyperbolaBranch:
        case CurveKind::HyperbolaFull: {
            // Scaled so the residual is relative at large |t|.
            return (x * x - y * y - 1.0) / std::max(1.0, x * x);
        }
        case CurveKind::Spiral: return std::hypot(x, y) - std::exp(-t);
        case CurveKind::AntiSpiral: return std::hypot(x, y) - std::exp(t);
        case CurveKind::ExpCurve: return (y - std::exp(x * x)) / std::max(1.0, y);
        case CurveKind::Parabola: return y - x * x;
        case CurveKind::ParallelLines: return y - heights_[component];
        case CurveKind::Generic: return 0.0;
    }
    return 0.0;
}

Point curve_point(const ParamCurve& curve, std::size_t component, double t) { return curve.point(component, t); }

// ---------------------------------------------------------------------------

Density::Density(Tabulated table) : rep_(std::move(table)) {
    const auto& tab = std::get<Tabulated>(rep_);
    if (tab.t.size() < 2 || tab.t.size() != tab.values.size())
        throw InvalidArgument("tabulated density needs at least two samples and matching sizes");
    for (std::size_t i = 1; i < tab.t.size(); ++i)
        if (!(tab.t[i - 1] < tab.t[i])) throw InvalidArgument("tabulated density abscissae must increase");
}

cplx Density::operator()(double t) const {
    if (const Expr* e = expr()) return e->eval(t);
    const Tabulated& tab = std::get<Tabulated>(rep_);
    if (t < tab.t.front() || t > tab.t.back()) return 0.0;
    const auto it = std::upper_bound(tab.t.begin(), tab.t.end(), t);
    if (it == tab.t.end()) return tab.values.back();
    const std::size_t i = static_cast<std::size_t>(it - tab.t.begin());
    const double w = (t - tab.t[i - 1]) / (tab.t[i] - tab.t[i - 1]);
    return (1.0 - w) * tab.values[i - 1] + w * tab.values[i];
}

std::string Density::describe() const {
    if (const Expr* e = expr()) return e->to_string();
    return "table[" + std::to_string(std::get<Tabulated>(rep_).t.size()) + "]";
}

void Measure::validate() const {
    if (densities.size() != curve.components())
        throw InvalidArgument("measure on " + curve.name() + " needs " + std::to_string(curve.components()) +
                              " densities, got " + std::to_string(densities.size()));
    for (std::size_t c = 0; c < curve.components(); ++c)
        if (!curve.domain(c).bounded() && !decay.limits_support())
            throw InvalidArgument("density on an unbounded domain requires a decay envelope");
}

Interval Measure::integration_window(std::size_t component, double abs_tol) const {
    std::optional<Envelope> env;
    if (decay.limits_support()) env = decay;
    return truncation_window(curve.domain(component), env, abs_tol);
}

void check_envelope(const Measure& mu, std::size_t samples_per_component) {
    mu.validate();
    const std::size_t n = std::max<std::size_t>(samples_per_component, 2);
    for (std::size_t c = 0; c < mu.curve.components(); ++c) {
        const Interval dom = mu.curve.domain(c);
        const Interval w = mu.integration_window(c, 1e-10);
        auto check = [&](double t) {
            if (!dom.contains(t)) return;
            const double g = std::abs(mu.densities[c](t));
            const double b = mu.decay.bound(t);
            if (g > b * (1.0 + 1e-9))
                throw InvalidArgument("density |g(" + std::to_string(t) + ")| = " + std::to_string(g) +
                                      " exceeds the declared envelope");
        };
        if (!w.empty())
            for (std::size_t i = 0; i < n; ++i)
                check(w.lo + (w.hi - w.lo) * static_cast<double>(i) / static_cast<double>(n - 1));
        if (mu.decay.kind == Envelope::Kind::CompactSupport) {
            const double width = mu.decay.b - mu.decay.a;
            for (std::size_t i = 0; i <= 64; ++i) {
                const double s = width * static_cast<double>(i) / 64.0;
                check(mu.decay.a - s);
                check(mu.decay.b + s);
            }
        }
    }
}

double total_variation(const Measure& mu, const QuadOpts& opts) {
    mu.validate();
    std::optional<Envelope> env;
    if (mu.decay.limits_support()) env = mu.decay;
    double tv = 0.0;
    for (std::size_t c = 0; c < mu.curve.components(); ++c) {
        const Density& g = mu.densities[c];
        const QuadResult r =
            integrate([&](double t) { return cplx(std::abs(g(t))); }, mu.curve.domain(c), opts, env);
        tv += r.value.real();
    }
    return tv;
}

// ---------------------------------------------------------------------------

void PlanarSet::validate() const {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Line>) {
                if (s.direction.x == 0.0 && s.direction.y == 0.0)
                    throw InvalidArgument("line direction must be nonzero");
            } else if constexpr (std::is_same_v<T, CircleSet>) {
                if (!(s.radius > 0.0)) throw InvalidArgument("circle radius must be positive");
            } else if constexpr (std::is_same_v<T, LatticeCross>) {
                if (!(s.alpha > 0.0) || !(s.beta > 0.0))
                    throw InvalidArgument("lattice-cross requires alpha > 0 and beta > 0");
            } else if constexpr (std::is_same_v<T, HorizontalLines>) {
                if (s.etas.empty()) throw InvalidArgument("horizontal line set needs at least one height");
            } else if constexpr (std::is_same_v<T, SetUnion>) {
                for (const PlanarSet& p : s.parts) p.validate();
            }
        },
        shape);
}

std::string PlanarSet::name() const {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Line>) return "line";
            else if constexpr (std::is_same_v<T, CircleSet>) return "circle";
            else if constexpr (std::is_same_v<T, LatticeCross>) return "lattice-cross";
            else if constexpr (std::is_same_v<T, CurveSet>) return "curve";
            else if constexpr (std::is_same_v<T, FiberList>) return "fibers";
            else if constexpr (std::is_same_v<T, HorizontalLines>) return "horizontal-lines";
            else return "union";
        },
        shape);
}

PlanarSet line_set(Point point, Point direction) {
    PlanarSet s{Line{point, direction}};
    s.validate();
    return s;
}

PlanarSet circle_set(double radius) {
    PlanarSet s{CircleSet{radius}};
    s.validate();
    return s;
}

PlanarSet lattice_cross(double alpha, double beta) {
    PlanarSet s{LatticeCross{alpha, beta}};
    s.validate();
    return s;
}

namespace {

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = 0.5 * (a + b);
        return v;
    }
    for (std::size_t i = 0; i < n; ++i)
        v[i] = i + 1 == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

// Liang-Barsky clip of point + s*dir against the window.
bool clip_line(const Line& l, const Window& w, double& s0, double& s1) {
    s0 = -kInf;
    s1 = kInf;
    const double p[4] = {-l.direction.x, l.direction.x, -l.direction.y, l.direction.y};
    const double q[4] = {l.point.x - w.x0, w.x1 - l.point.x, l.point.y - w.y0, w.y1 - l.point.y};
    for (int k = 0; k < 4; ++k) {
        if (p[k] == 0.0) {
            if (q[k] < 0.0) return false;
            continue;
        }
        const double r = q[k] / p[k];
        if (p[k] < 0.0) s0 = std::max(s0, r);
        else s1 = std::min(s1, r);
    }
    return s0 <= s1;
}

void sample_into(const PlanarSet& lambda, std::size_t n, const Window& w, std::vector<Point>& out) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Line>) {
                double s0, s1;
                if (!clip_line(s, w, s0, s1)) return;
                for (double u : linspace(s0, s1, n)) {
                    Point p{s.point.x + u * s.direction.x, s.point.y + u * s.direction.y};
                    p.x = std::clamp(p.x, w.x0, w.x1);
                    p.y = std::clamp(p.y, w.y0, w.y1);
                    out.push_back(p);
                }
            } else if constexpr (std::is_same_v<T, CircleSet>) {
                for (std::size_t m = 0; m < n; ++m) {
                    const double th = 2.0 * kPi * static_cast<double>(m) / static_cast<double>(n);
                    const Point p{s.radius * std::cos(th), s.radius * std::sin(th)};
                    if (w.contains(p)) out.push_back(p);
                }
            } else if constexpr (std::is_same_v<T, LatticeCross>) {
                if (w.y0 <= 0.0 && 0.0 <= w.y1)
                    for (double k = std::ceil(w.x0 / s.alpha); k <= std::floor(w.x1 / s.alpha); k += 1.0)
                        out.push_back({k * s.alpha, 0.0});
                if (w.x0 <= 0.0 && 0.0 <= w.x1)
                    for (double k = std::ceil(w.y0 / s.beta); k <= std::floor(w.y1 / s.beta); k += 1.0)
                        if (k != 0.0) out.push_back({0.0, k * s.beta});
            } else if constexpr (std::is_same_v<T, CurveSet>) {
                for (std::size_t c = 0; c < s.curve.components(); ++c) {
                    const Interval dom = s.curve.domain(c);
                    const double lo = std::max(dom.lo, -60.0);
                    const double hi = std::min(dom.hi, 60.0);
                    constexpr std::size_t kScan = 20001;
                    double first = kInf, last = -kInf;
                    for (double t : linspace(lo, hi, kScan)) {
                        if (w.contains(s.curve.point_unchecked(c, t))) {
                            first = std::min(first, t);
                            last = std::max(last, t);
                        }
                    }
                    if (first > last) continue;
                    // Widen by one scan step so the window boundary is reached.
                    const double step = (hi - lo) / static_cast<double>(kScan - 1);
                    first = std::max(lo, first - step);
                    last = std::min(hi, last + step);
                    for (double t : linspace(first, last, n)) {
                        const Point p = s.curve.point_unchecked(c, t);
                        if (w.contains(p)) out.push_back(p);
                    }
                }
            } else if constexpr (std::is_same_v<T, FiberList>) {
                for (const FiberPoint& f : s.fibers) {
                    if (f.xi < w.x0 || f.xi > w.x1) continue;
                    for (double eta : f.etas) {
                        if (!s.periodic2) {
                            if (w.y0 <= eta && eta <= w.y1) out.push_back({f.xi, eta});
                            continue;
                        }
                        for (double k = std::ceil((w.y0 - eta) / 2.0); k <= std::floor((w.y1 - eta) / 2.0); k += 1.0)
                            out.push_back({f.xi, eta + 2.0 * k});
                    }
                }
            } else if constexpr (std::is_same_v<T, HorizontalLines>) {
                std::vector<double> heights;
                for (double eta : s.etas) {
                    if (!s.periodic2) {
                        if (w.y0 <= eta && eta <= w.y1) heights.push_back(eta);
                        continue;
                    }
                    for (double k = std::ceil((w.y0 - eta) / 2.0); k <= std::floor((w.y1 - eta) / 2.0); k += 1.0)
                        heights.push_back(eta + 2.0 * k);
                }
                std::sort(heights.begin(), heights.end());
                for (double h : heights)
                    for (double x : linspace(w.x0, w.x1, n)) out.push_back({x, h});
            } else {
                for (const PlanarSet& part : s.parts) sample_into(part, n, w, out);
            }
        },
        lambda.shape);
}

}  // namespace

std::vector<Point> sample_set(const PlanarSet& lambda, std::size_t n, const Window& window) {
    if (n == 0) throw InvalidArgument("sample count must be at least 1");
    if (!(window.x0 <= window.x1) || !(window.y0 <= window.y1) ||
        (window.x0 == window.x1 && window.y0 == window.y1))
        throw InvalidArgument("sampling window is degenerate");
    lambda.validate();
    std::vector<Point> out;
    sample_into(lambda, n, window, out);
    if (out.empty()) throw InvalidArgument("set has empty intersection with the sampling window");
    return out;
}

}  // namespace huplab
