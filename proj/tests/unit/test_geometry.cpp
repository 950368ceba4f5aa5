#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "huplab/error.hpp"
#include "huplab/geometry.hpp"
#include "test_support.hpp"

using namespace huplab;
using testing::kPi;

namespace {

bool near(Point a, Point b, double tol = 1e-15) { return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol; }

}  // namespace

TEST_CASE("curve points at t = 0") {
    CHECK(curve_point(ParamCurve::circle(), 0, 0.0) == Point{1.0, 0.0});
    CHECK(curve_point(ParamCurve::hyperbola_branch(), 0, 0.0) == Point{1.0, 0.0});
    CHECK(curve_point(ParamCurve::spiral(), 0, 0.0) == Point{1.0, 0.0});
    CHECK(curve_point(ParamCurve::exp_curve(), 0, 0.0) == Point{0.0, 1.0});
    CHECK(curve_point(ParamCurve::anti_spiral(), 0, 0.0) == Point{1.0, 0.0});
    const ParamCurve lines = ParamCurve::parallel_lines({0, 1, 2, 3});
    CHECK(lines.components() == 4);
    CHECK(curve_point(lines, 3, 0.25) == Point{0.25, 3.0});
}

TEST_CASE("defining identities hold along every catalog curve") {
    for (int i = 0; i < 200; ++i) {
        const double u = testing::uniform(0.0, 3.0);
        const Point c = curve_point(ParamCurve::circle(), 0, u - 1.5);
        CHECK(std::abs(c.x * c.x + c.y * c.y - 1.0) < 1e-14);
        const Point h = curve_point(ParamCurve::hyperbola_full(), 0, u - 1.5);
        CHECK(std::abs(h.x * h.x - h.y * h.y - 1.0) < 1e-12);
        const Point s = curve_point(ParamCurve::spiral(), 0, u);
        CHECK(std::abs(std::hypot(s.x, s.y) - std::exp(-u)) < 1e-15);
        const Point a = curve_point(ParamCurve::anti_spiral(), 0, -u);
        CHECK(std::abs(std::hypot(a.x, a.y) - std::exp(-u)) < 1e-15);
        const Point e = curve_point(ParamCurve::exp_curve(), 0, u - 1.5);
        CHECK(std::abs(e.y - std::exp((u - 1.5) * (u - 1.5))) < 1e-15 * e.y);
        for (const ParamCurve& k : {ParamCurve::circle(), ParamCurve::hyperbola_full(), ParamCurve::spiral(),
                                    ParamCurve::exp_curve(), ParamCurve::parabola()})
            CHECK(std::abs(k.identity_residual(0, std::clamp(u - 1.5, k.domain(0).lo, k.domain(0).hi))) < 1e-12);
    }
}

TEST_CASE("domains are enforced") {
    CHECK_THROWS_AS(curve_point(ParamCurve::hyperbola_branch(), 0, -0.1), InvalidArgument);
    CHECK_THROWS_AS(curve_point(ParamCurve::spiral(), 0, -1.0), InvalidArgument);
    CHECK_THROWS_AS(curve_point(ParamCurve::anti_spiral(), 0, 0.5), InvalidArgument);
    CHECK_THROWS_AS(curve_point(ParamCurve::circle(), 0, 4.0), InvalidArgument);
    CHECK_THROWS_AS(curve_point(ParamCurve::parallel_lines({0, 1}), 2, 0.0), InvalidArgument);
}

TEST_CASE("generic and translated curves") {
    const ParamCurve g = ParamCurve::generic(parse("2*cos(t)"), parse("sin(t)"), {-kPi, kPi});
    const Point p = curve_point(g, 0, kPi / 2);
    CHECK(near(p, {0.0, 1.0}, 1e-15));
    const ParamCurve moved = ParamCurve::circle().translated({1.0, -2.0});
    CHECK(near(curve_point(moved, 0, 0.0), {2.0, -2.0}));
    CHECK(moved.offset() == Point{1.0, -2.0});
}

TEST_CASE("sample_set documented examples") {
    std::vector<Point> lat = sample_set(lattice_cross(1, 1), 1, {-2, 2, -2, 2});
    std::vector<Point> expect = {{-2, 0}, {-1, 0}, {0, 0}, {1, 0}, {2, 0}, {0, -2}, {0, -1}, {0, 1}, {0, 2}};
    const auto by_xy = [](Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; };
    std::sort(lat.begin(), lat.end(), by_xy);
    std::sort(expect.begin(), expect.end(), by_xy);
    CHECK(lat == expect);

    const std::vector<Point> circ = sample_set(circle_set(1.0), 4, {-2, 2, -2, 2});
    REQUIRE(circ.size() == 4);
    CHECK(near(circ[0], {1, 0}));
    CHECK(near(circ[1], {0, 1}));
    CHECK(near(circ[2], {-1, 0}));
    CHECK(near(circ[3], {0, -1}));

    const PlanarSet fib{FiberList{{FiberPoint{0.5, {0.25}}}, true}};
    const std::vector<Point> f = sample_set(fib, 1, {0, 1, 0, 3.999});
    REQUIRE(f.size() == 2);
    CHECK(f[0] == Point{0.5, 0.25});
    CHECK(f[1] == Point{0.5, 2.25});
}

TEST_CASE("sample_set properties") {
    const PlanarSet hyp{CurveSet{ParamCurve::hyperbola_full()}};
    const Window w{-5, 5, -5, 5};
    const std::vector<Point> pts = sample_set(hyp, 300, w);
    CHECK(pts.size() > 250);
    for (const Point& p : pts) {
        CHECK(w.contains(p));
        CHECK(std::abs(p.x * p.x - p.y * p.y - 1.0) < 1e-12 * (1 + p.x * p.x));
    }
    // Periodic fibers: shifting by 2 inside the window maps samples to samples.
    const PlanarSet fib{FiberList{{FiberPoint{0.0, {0.1, 1.3}}, FiberPoint{2.0, {0.7}}}, true}};
    const std::vector<Point> s = sample_set(fib, 1, {-1, 3, -4, 4});
    for (const Point& p : s) {
        if (p.y + 2 > 4) continue;
        const bool found = std::any_of(s.begin(), s.end(), [&](Point q) { return q.x == p.x && std::abs(q.y - p.y - 2) < 1e-14; });
        CHECK(found);
    }
    CHECK(sample_set(fib, 1, {-1, 3, -4, 4}) == s);

    const std::vector<Point> l = sample_set(line_set({0, 0}, {1, 1}), 11, {-1, 1, -2, 2});
    REQUIRE(l.size() == 11);
    CHECK(near(l.front(), {-1, -1}));
    CHECK(near(l.back(), {1, 1}));
}

TEST_CASE("sample_set errors and set validation") {
    CHECK_THROWS_AS(sample_set(circle_set(1.0), 0, {-2, 2, -2, 2}), InvalidArgument);
    CHECK_THROWS_AS(sample_set(circle_set(1.0), 4, {1, 1, 2, 2}), InvalidArgument);
    CHECK_THROWS_AS(sample_set(circle_set(1.0), 8, {5, 6, 5, 6}), InvalidArgument);
    CHECK_THROWS_AS(lattice_cross(0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(lattice_cross(1.0, -1.0), InvalidArgument);
    CHECK_THROWS_AS(circle_set(0.0), InvalidArgument);
    CHECK_THROWS_AS(line_set({0, 0}, {0, 0}), InvalidArgument);
}

TEST_CASE("measures and envelopes") {
    Measure ok{ParamCurve::hyperbola_full(), {parse("exp(-t^2)")}, Envelope::gaussian()};
    CHECK_NOTHROW(check_envelope(ok));
    CHECK(std::abs(total_variation(ok) - std::sqrt(kPi)) < 1e-9);

    Measure too_big{ParamCurve::hyperbola_full(), {parse("2*exp(-t^2)")}, Envelope::gaussian()};
    CHECK_THROWS_AS(check_envelope(too_big), InvalidArgument);

    Measure leaks{ParamCurve::hyperbola_full(), {parse("chi(-1,2)(t)")}, Envelope::compact(-1, 1)};
    CHECK_THROWS_AS(check_envelope(leaks), InvalidArgument);

    Measure no_decay{ParamCurve::exp_curve(), {parse("exp(-t^2)")}, Envelope::none()};
    CHECK_THROWS_AS(no_decay.validate(), InvalidArgument);

    Measure wrong_count{ParamCurve::parallel_lines({0, 1}), {parse("0")}, Envelope::compact(-1, 1)};
    CHECK_THROWS_AS(wrong_count.validate(), InvalidArgument);

    Measure circle{ParamCurve::circle(), {parse("sin(t)")}, Envelope::none()};
    CHECK(std::abs(total_variation(circle) - 4.0) < 1e-10);
}

TEST_CASE("tabulated densities interpolate linearly") {
    const Density d(Tabulated{{0.0, 1.0, 2.0}, {cplx(0.0), cplx(2.0, 2.0), cplx(0.0)}});
    CHECK(d(0.5) == cplx(1.0, 1.0));
    CHECK(d(-0.5) == cplx(0.0));
    CHECK(d(2.5) == cplx(0.0));
    CHECK(d.describe() == "table[3]");
}
