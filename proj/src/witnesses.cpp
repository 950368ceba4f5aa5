#include "huplab/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "huplab/bessel.hpp"
#include "huplab/error.hpp"
#include "huplab/parallel.hpp"
#include "huplab/transform.hpp"

namespace huplab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinTotalVariation = 1e-6;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double max_abs(const std::vector<FTValue>& values) {
    double m = 0.0;
    for (const FTValue& v : values) m = std::max(m, std::abs(v.value));
    return m;
}

Certificate finish(Certificate c) {
    c.measure.validate();
    c.total_variation = total_variation(c.measure);
    if (!(c.total_variation >= kMinTotalVariation)) throw NumericError(c.name + ": measure is numerically zero");
    const std::vector<Point> pts = sample_set(c.lambda, kConstructSamples, c.window);
    c.residual_on_lambda = max_abs(mu_hat_on_points(c.measure, pts));
    c.samples_used = pts.size();
    c.witness_magnitude = std::abs(transform_at(c, c.witness));
    return c;
}

Measure circle_measure(const std::string& density) {
    return {ParamCurve::circle(), {Density::from_text(density)}, Envelope::none()};
}

}  // namespace

cplx transform_at(const Certificate& c, Point at) { return mu_hat(c.measure, at.x, at.y).value; }

Certificate circle_line_annihilator() {
    Certificate c{.name = "circle-line",
                  .measure = circle_measure("sin(t)"),
                  .lambda = line_set({0.0, 0.0}, {1.0, 0.0}),
                  .window = {-10.0, 10.0, -1.0, 1.0},
                  .witness = {0.0, 1.0},
                  .reference = "unit circle against a straight line: sin(theta) is odd, so the transform "
                               "vanishes on the x-axis"};
    return finish(std::move(c));
}

Certificate circle_rational_lines_annihilator(int j) {
    if (j < 1) throw InvalidArgument("number of lines must be at least 1");
    std::vector<PlanarSet> lines;
    for (int m = 0; m < j; ++m) {
        const double phi = kPi * m / j;
        lines.push_back(line_set({0.0, 0.0}, {std::cos(phi), std::sin(phi)}));
    }
    const double rho = std::max(1.0, j / kPi);
    const double phi_w = kPi / (2.0 * j);
    Certificate c{.name = "circle-lines",
                  .measure = circle_measure("sin(" + std::to_string(j) + "*t)"),
                  .lambda = PlanarSet{SetUnion{std::move(lines)}},
                  .window = {-10.0, 10.0, -10.0, 10.0},
                  .witness = {rho * std::cos(phi_w), rho * std::sin(phi_w)},
                  .reference = "unit circle against lines through 0 at rational angles: the transform of "
                               "sin(j theta) is a Bessel factor times sin(j phi)"};
    return finish(std::move(c));
}

Certificate circle_circle_certificate(int k, double radius) {
    if (k < 0) throw InvalidArgument("Fourier mode k must be nonnegative");
    if (!(radius > 0.0)) throw InvalidArgument("circle radius must be positive");
    // Witness between the zeros that bracket pi * radius.
    const Order order = Order::integer(static_cast<unsigned>(k));
    int n = 1;
    while (bessel_zero(order, n + 1) <= kPi * radius) ++n;
    const double rw = 0.5 * (bessel_zero(order, n) + bessel_zero(order, n + 1)) / kPi;
    const double reach = std::max(radius, rw) + 1.0;
    Certificate c{.name = "circle-circle",
                  .measure = circle_measure("exp(i*" + std::to_string(k) + "*t)"),
                  .lambda = circle_set(radius),
                  .window = {-reach, reach, -reach, reach},
                  .witness = {rw, 0.0},
                  .reference = "unit circle against a circle of radius r: the transform of e^{ik theta} "
                               "on that circle is proportional to J_k(pi r)"};
    return finish(std::move(c));
}

Certificate circle_bessel_circle_annihilator(int k, int n) {
    if (k < 0) throw InvalidArgument("Fourier mode k must be nonnegative");
    if (n < 1) throw InvalidArgument("zero index n must be at least 1");
    Certificate c = circle_circle_certificate(k, bessel_zero(Order::integer(static_cast<unsigned>(k)), n) / kPi);
    c.name = "circle-bessel";
    return c;
}

Certificate hyperbola_line_annihilator() {
    Measure mu{ParamCurve::hyperbola_full(), {Density::from_text("sqrt(cosh(2*t))*sin(t)*chi(-pi,pi)(t)")},
               Envelope::compact(-kPi, kPi)};
    Certificate c{.name = "hyperbola-line",
                  .measure = std::move(mu),
                  .lambda = line_set({0.0, 0.0}, {1.0, 0.0}),
                  .window = {-8.0, 8.0, -1.0, 1.0},
                  // |mu^(0, 1)| is only about 0.0067; (0, 1/2) gives about 0.49.
                  .witness = {0.0, 0.5},
                  .reference = "hyperbola against a line parallel to the x-axis: the density is odd while "
                               "cosh t is even"};
    return finish(std::move(c));
}

Certificate expcurve_vertical_line_annihilator() {
    Measure mu{ParamCurve::exp_curve(), {Density::from_text("sin(t)*exp(-t^2)")}, Envelope::gaussian(1.0, 1.0)};
    Certificate c{.name = "expcurve-vertical-line",
                  .measure = std::move(mu),
                  .lambda = line_set({0.0, 0.0}, {0.0, 1.0}),
                  .window = {-1.0, 1.0, -8.0, 8.0},
                  .witness = {1.0, 0.0},
                  .reference = "curve (t, e^{t^2}) against the y-axis: an odd density annihilates every "
                               "point (0, y)"};
    return finish(std::move(c));
}

Certificate fourlines_annihilator(int p, double eta0) {
    if (p < 3) throw InvalidArgument("four-lines exponent p must be >= 3");
    if (!(eta0 >= 0.0 && eta0 < 2.0)) throw InvalidArgument("eta0 must lie in [0, 2)");
    const std::string tri = "(1-abs(t))*chi(-1,1)(t)";
    // f0 = -e^{-p pi i eta0} f3 cancels f3's phase e^{-p pi i eta} at eta = eta0 + 2Z.
    const std::string f0 = "-exp(-i*pi*" + fmt(p * eta0) + ")*" + tri;
    Measure mu{ParamCurve::parallel_lines({0.0, 1.0, 2.0, static_cast<double>(p)}),
               {Density::from_text(f0), Density::from_text("0"), Density::from_text("0"), Density::from_text(tri)},
               Envelope::compact(-1.0, 1.0)};
    Certificate c{.name = "fourlines",
                  .measure = std::move(mu),
                  .lambda = PlanarSet{HorizontalLines{{eta0}, true}},
                  .window = {-10.0, 10.0, eta0 - 2.5, eta0 + 2.5},
                  .witness = {0.0, eta0 + 1.0 / p},
                  .reference = "lines R x {0, 1, 2, p} against one periodic fiber: the line measures at "
                               "heights 0 and p cancel on R x (eta0 + 2Z)"};
    return finish(std::move(c));
}

VerifyReport verify_certificate(const Certificate& c, std::size_t n_lambda, double tol) {
    VerifyReport r;
    try {
        if (n_lambda == 0) throw InvalidArgument("n_lambda must be positive");
        if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
        c.measure.validate();
        if (!(total_variation(c.measure) >= kMinTotalVariation)) {
            r.error = "zero measure";
            return r;
        }
        const std::vector<Point> pts = sample_set(c.lambda, n_lambda, c.window);
        r.samples = pts.size();
        r.residual = max_abs(mu_hat_on_points(c.measure, pts));
        r.witness = std::abs(transform_at(c, c.witness));
    } catch (const Error& e) {
        r.error = e.what();
        return r;
    }
    r.passed = r.residual < tol && r.witness > kWitnessThreshold;
    if (!r.passed) {
        if (!(r.residual < tol)) r.error = "residual " + fmt_short(r.residual) + " exceeds " + fmt_short(tol);
        else r.error = "witness magnitude " + fmt_short(r.witness) + " not above threshold";
    }
    return r;
}

// ---------------------------------------------------------------------------

std::string to_string(Answer a) {
    switch (a) {
        case Answer::HUP: return "HUP";
        case Answer::NotHUP: return "NotHUP";
        case Answer::Unknown: return "Unknown";
    }
    return "?";
}

AngleSpec AngleSpec::rational(long num, long den) {
    if (den == 0) throw InvalidArgument("angle denominator must be nonzero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    AngleSpec a;
    a.kind = Kind::Rational;
    a.num = num;
    a.den = den;
    a.value = static_cast<double>(num) / static_cast<double>(den);
    return a;
}

AngleSpec AngleSpec::irrational(double value) {
    AngleSpec a;
    a.kind = Kind::Irrational;
    a.value = value;
    return a;
}

AngleSpec AngleSpec::numeric(double value) {
    if (!std::isfinite(value)) throw InvalidArgument("angle must be finite");
    AngleSpec a;
    a.kind = Kind::Numeric;
    a.value = value;
    return a;
}

AngleSpec AngleSpec::parse(const std::string& text) {
    if (text == "irrational") return irrational();
    const auto parse_long = [&](const std::string& s) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("bad angle '" + text + "'");
        }
        if (used != s.size()) throw InvalidArgument("bad angle '" + text + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash != std::string::npos) return rational(parse_long(text.substr(0, slash)), parse_long(text.substr(slash + 1)));
    if (!text.empty() && text.find_first_not_of("+-0123456789") == std::string::npos) return rational(parse_long(text), 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("bad angle '" + text + "'");
    }
    if (used != text.size()) throw InvalidArgument("bad angle '" + text + "'");
    return numeric(v);
}

namespace {

struct PairEntry {
    PairKind kind;
    const char* name;
};

constexpr PairEntry kPairs[] = {
    {PairKind::HyperbolaLatticeCross, "lattice-cross"},
    {PairKind::CircleCircle, "circle-circle"},
    {PairKind::CircleLine, "circle-line"},
    {PairKind::CircleParallelLines, "circle-parallel-lines"},
    {PairKind::CircleConcurrentLines, "circle-lines"},
    {PairKind::CircleSpiral, "circle-spiral"},
    {PairKind::ParabolaLine, "parabola-line"},
    {PairKind::ParabolaTwoLines, "parabola-two-lines"},
    {PairKind::ParabolaTwoLineSubsets, "parabola-two-line-subsets"},
    {PairKind::SphereSphere, "sphere-sphere"},
    {PairKind::ParaboloidHyperplane, "paraboloid-hyperplane"},
    {PairKind::SpiralAntiSpiral, "spiral-antispiral"},
    {PairKind::ExpCurveHorizontalLine, "expcurve-horizontal-line"},
    {PairKind::ExpCurveVerticalLine, "expcurve-vertical-line"},
    {PairKind::ExpCurveTwoVerticalLines, "expcurve-two-vertical-lines"},
    {PairKind::HyperbolaBranchReflected, "hyperbola-branch-reflected"},
    {PairKind::HyperbolaHorizontalLine, "hyperbola-line"},
    {PairKind::HyperbolaTwoHorizontalLines, "hyperbola-two-horizontal-lines"},
    {PairKind::HyperbolaTwoLinesAtAngle, "hyperbola-two-lines-angle"},
    {PairKind::FourLinesSingleFiber, "fourlines-fiber"},
};

std::string describe_orders(const NonzeroReport& r) {
    std::string s = std::to_string(r.checked.size()) + " orders evaluated";
    if (r.vanishing) s += ", J vanishes at order " + fmt_short(r.vanishing->value());
    return s;
}

Verdict bessel_verdict(double x, const OrderFamily& family, const std::string& citation, const std::string& what,
                       std::optional<std::string> certificate) {
    const NonzeroReport r = check_orders_nonzero(x, family);
    Verdict v;
    v.citation = citation;
    v.condition = what + " at pi*r = " + fmt_short(x) + ": " + describe_orders(r);
    v.answer = r.all_nonzero ? Answer::HUP : Answer::NotHUP;
    if (!r.all_nonzero) v.certificate = std::move(certificate);
    return v;
}

Verdict fixed(Answer a, std::string citation, std::string condition, std::optional<std::string> cert = std::nullopt) {
    return {a, std::move(citation), std::move(condition), std::move(cert)};
}

}  // namespace

std::string pair_name(PairKind kind) {
    for (const PairEntry& e : kPairs)
        if (e.kind == kind) return e.name;
    return "?";
}

std::optional<PairKind> pair_from_name(const std::string& name) {
    for (const PairEntry& e : kPairs)
        if (name == e.name) return e.kind;
    return std::nullopt;
}

std::vector<std::string> pair_names() {
    std::vector<std::string> out;
    for (const PairEntry& e : kPairs) out.emplace_back(e.name);
    return out;
}

Verdict known_pair_verdict(const PairDescriptor& pair) {
    switch (pair.kind) {
        case PairKind::HyperbolaLatticeCross: {
            if (!(pair.alpha > 0.0) || !(pair.beta > 0.0))
                return fixed(Answer::Unknown, "", "lattice-cross needs alpha, beta > 0");
            const double ab = pair.alpha * pair.beta;
            return fixed(ab <= 1.0 ? Answer::HUP : Answer::NotHUP,
                         "hyperbola x1 x2 = 1 and the lattice-cross: uniqueness iff alpha*beta <= 1",
                         "alpha*beta = " + fmt_short(ab));
        }
        case PairKind::CircleCircle:
            if (!(pair.radius > 0.0)) return fixed(Answer::Unknown, "", "circle radius must be positive");
            return bessel_verdict(kPi * pair.radius, AllIntegers{},
                                  "unit circle and a circle of radius r: uniqueness iff J_k(pi r) != 0 for all k >= 0",
                                  "J_k, k >= 0", "circle-circle");
        case PairKind::CircleLine:
            return fixed(Answer::NotHUP, "unit circle and a straight line: never a uniqueness pair",
                         "no condition", "circle-line");
        case PairKind::CircleParallelLines:
            return fixed(Answer::HUP, "unit circle and two parallel lines: uniqueness pair", "no condition");
        case PairKind::CircleConcurrentLines: {
            const std::string cite =
                "unit circle and finitely many concurrent lines at angle pi*alpha: not a uniqueness pair iff "
                "alpha is rational";
            switch (pair.angle.kind) {
                case AngleSpec::Kind::Rational:
                    return fixed(Answer::NotHUP, cite,
                                 "alpha = " + std::to_string(pair.angle.num) + "/" + std::to_string(pair.angle.den) +
                                     " is rational",
                                 "circle-lines");
                case AngleSpec::Kind::Irrational:
                    return fixed(Answer::HUP, cite, "alpha declared irrational");
                case AngleSpec::Kind::Numeric:
                    return fixed(Answer::Unknown, cite,
                                 "alpha = " + fmt_short(pair.angle.value) +
                                     " given as a decimal; rationality needs an exact a/b input");
            }
            break;
        }
        case PairKind::CircleSpiral:
            return fixed(Answer::HUP,
                         "unit circle and the spiral (e^t cos t, e^t sin t), t <= 0: uniqueness pair; the spiral "
                         "crosses a circle S_r with J_k(r) != 0 for every k",
                         "no condition");
        case PairKind::ParabolaLine: {
            const Point d = pair.direction;
            if (d.x == 0.0 && d.y == 0.0) return fixed(Answer::Unknown, "", "line direction must be nonzero");
            return fixed(d.y == 0.0 ? Answer::HUP : Answer::NotHUP,
                         "parabola y = x^2 and a line: uniqueness iff the line is parallel to the x-axis",
                         "direction = (" + fmt_short(d.x) + ", " + fmt_short(d.y) + ")");
        }
        case PairKind::ParabolaTwoLines:
            return fixed(Answer::HUP, "parabola and two different lines: uniqueness pair", "no condition");
        case PairKind::ParabolaTwoLineSubsets:
            return fixed(Answer::HUP,
                         "parabola and positive-measure subsets of two lines not parallel to the x-axis: "
                         "uniqueness pair",
                         "no condition");
        case PairKind::SphereSphere:
            if (pair.dimension < 2) return fixed(Answer::Unknown, "", "sphere dimension must be at least 2");
            if (!(pair.radius > 0.0)) return fixed(Answer::Unknown, "", "sphere radius must be positive");
            return bessel_verdict(kPi * pair.radius, EvenHalfIntegers{pair.dimension},
                                  "unit sphere in R^n and a sphere of radius r: uniqueness iff "
                                  "J_{(n+2k-2)/2}(pi r) != 0 for all k >= 0",
                                  "J_{(n+2k-2)/2}, n = " + std::to_string(pair.dimension), std::nullopt);
        case PairKind::ParaboloidHyperplane: {
            const int n = pair.dimension;
            if (n < 2 || pair.normal.size() != static_cast<std::size_t>(n))
                return fixed(Answer::Unknown, "", "hyperplane normal must have dimension entries");
            const bool zero = std::all_of(pair.normal.begin(), pair.normal.end(), [](double v) { return v == 0.0; });
            if (zero) return fixed(Answer::Unknown, "", "hyperplane normal must be nonzero");
            const bool parallel = std::all_of(pair.normal.begin(), pair.normal.end() - 1, [](double v) { return v == 0.0; });
            return fixed(parallel ? Answer::HUP : Answer::NotHUP,
                         "paraboloid x_n = |x'|^2 and a hyperplane: uniqueness iff the hyperplane is parallel to "
                         "x_n = 0",
                         parallel ? "normal along e_n" : "normal not along e_n");
        }
        case PairKind::SpiralAntiSpiral:
            return fixed(Answer::HUP, "spiral e^{-t}(cos t, sin t), t >= 0, and the anti-spiral: uniqueness pair",
                         "no condition");
        case PairKind::ExpCurveHorizontalLine:
            return fixed(Answer::HUP, "curve (t, e^{t^2}) and a line parallel to the x-axis: uniqueness pair",
                         "no condition");
        case PairKind::ExpCurveVerticalLine:
            return fixed(Answer::NotHUP,
                         "curve (t, e^{t^2}) and one vertical line: annihilated exactly by the odd densities",
                         "no condition", "expcurve-vertical-line");
        case PairKind::ExpCurveTwoVerticalLines:
            return fixed(Answer::HUP, "curve (t, e^{t^2}) and two lines parallel to the y-axis: uniqueness pair",
                         "no condition");
        case PairKind::HyperbolaBranchReflected:
            return fixed(Answer::HUP,
                         "branch (cosh t, sinh t), t >= 0, and the reflected branch (cosh s, -sinh s): uniqueness "
                         "pair",
                         "no condition");
        case PairKind::HyperbolaHorizontalLine:
            return fixed(Answer::NotHUP,
                         "hyperbola and one line parallel to the x-axis: sqrt(cosh 2t) sin t on (-pi, pi) "
                         "annihilates it",
                         "no condition", "hyperbola-line");
        case PairKind::HyperbolaTwoHorizontalLines:
            return fixed(Answer::HUP, "hyperbola and two lines parallel to the x-axis: uniqueness pair",
                         "no condition");
        case PairKind::HyperbolaTwoLinesAtAngle: {
            const double a = pair.angle.value;
            const std::string cite = "hyperbola and two lines meeting at an angle in (0, pi/4): uniqueness pair";
            if (a > 0.0 && a < 0.25) return fixed(Answer::HUP, cite, "angle/pi = " + fmt_short(a) + " in (0, 1/4)");
            return fixed(Answer::Unknown, cite, "angle/pi = " + fmt_short(a) + " outside (0, 1/4): not covered");
        }
        case PairKind::FourLinesSingleFiber:
            if (pair.p < 3) return fixed(Answer::Unknown, "", "four-lines exponent p must be >= 3");
            return fixed(Answer::NotHUP,
                         "lines R x {0, 1, 2, p} and a single periodic fiber R x (eta0 + 2Z): not a uniqueness "
                         "pair",
                         "p = " + std::to_string(pair.p) + ", eta0 = " + fmt_short(pair.eta0), "fourlines");
    }
    return fixed(Answer::Unknown, "", "pair outside the catalog");
}

std::optional<Certificate> certificate_for(const PairDescriptor& pair) {
    const Verdict v = known_pair_verdict(pair);
    if (v.answer != Answer::NotHUP || !v.certificate) return std::nullopt;
    switch (pair.kind) {
        case PairKind::CircleCircle: {
            const NonzeroReport r = check_orders_nonzero(kPi * pair.radius, AllIntegers{});
            return circle_circle_certificate(static_cast<int>(r.vanishing->twice_nu() / 2), pair.radius);
        }
        case PairKind::CircleLine: return circle_line_annihilator();
        case PairKind::CircleConcurrentLines:
            return circle_rational_lines_annihilator(static_cast<int>(std::max(1L, pair.angle.den)));
        case PairKind::ExpCurveVerticalLine: return expcurve_vertical_line_annihilator();
        case PairKind::HyperbolaHorizontalLine: return hyperbola_line_annihilator();
        case PairKind::FourLinesSingleFiber: return fourlines_annihilator(pair.p, pair.eta0);
        default: return std::nullopt;
    }
}

}  // namespace huplab
