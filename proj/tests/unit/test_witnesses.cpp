#include <doctest.h>

#include <cmath>

#include "huplab/bessel.hpp"
#include "huplab/error.hpp"
#include "huplab/transform.hpp"
#include "huplab/witnesses.hpp"
#include "test_support.hpp"

using namespace huplab;
using testing::kPi;

namespace {

void check_passes(const Certificate& c) {
    INFO(c.name);
    CHECK(c.total_variation >= 1e-6);
    CHECK(c.residual_on_lambda < kLambdaTolerance);
    CHECK(c.witness_magnitude > kWitnessThreshold);
    CHECK(c.samples_used >= kConstructSamples);
    const VerifyReport r = verify_certificate(c, 512, 1e-6);
    CHECK(r.passed);
    CHECK(r.samples >= 512);
    CHECK(r.residual < 1e-6);
    CHECK(r.witness > 0.05);
    CHECK(r.error.empty());
}

double j(unsigned k, double x) { return bessel_j(Order::integer(k), x); }

PairDescriptor pair(PairKind k) {
    PairDescriptor d;
    d.kind = k;
    return d;
}

}  // namespace

TEST_CASE("circle and a line") {
    const Certificate c = circle_line_annihilator();
    check_passes(c);
    CHECK(std::abs(c.total_variation - 4.0) < 1e-9);
    CHECK(std::abs(c.witness_magnitude - 2.0 * kPi * j(1, kPi)) < 1e-9);
    CHECK(c.residual_on_lambda < 1e-8);
}

TEST_CASE("circle and rational lines") {
    for (int jj = 1; jj <= 4; ++jj) check_passes(circle_rational_lines_annihilator(jj));
    const Certificate one = circle_rational_lines_annihilator(1);
    const Certificate line = circle_line_annihilator();
    for (double x : {-3.0, 0.5, 2.0}) CHECK(std::abs(transform_at(one, {x, 0.4}) - transform_at(line, {x, 0.4})) < 1e-12);
    // Witness magnitude at rho = 1, phi = pi/(2j) equals 2 pi |J_j(pi)|.
    for (int jj = 1; jj <= 3; ++jj) {
        const Certificate c = circle_rational_lines_annihilator(jj);
        const double phi = kPi / (2.0 * jj);
        const double m = std::abs(transform_at(c, {std::cos(phi), std::sin(phi)}));
        CHECK(std::abs(m - 2.0 * kPi * std::abs(j(static_cast<unsigned>(jj), kPi))) < 1e-9);
        CHECK(m > 0.05);
    }
    CHECK(circle_rational_lines_annihilator(3).residual_on_lambda < 1e-8);
    CHECK_THROWS_AS(circle_rational_lines_annihilator(0), InvalidArgument);
}

TEST_CASE("circle and a circle at a Bessel zero") {
    const Certificate c01 = circle_bessel_circle_annihilator(0, 1);
    check_passes(c01);
    CHECK(c01.residual_on_lambda < 1e-8);
    const auto* cs = std::get_if<CircleSet>(&c01.lambda.shape);
    REQUIRE(cs != nullptr);
    CHECK(std::abs(cs->radius - 2.404825557695773 / kPi) < 1e-14);

    const Certificate c21 = circle_bessel_circle_annihilator(2, 1);
    check_passes(c21);
    CHECK(c21.residual_on_lambda < 1e-8);
    check_passes(circle_bessel_circle_annihilator(1, 3));

    // Off-zero radius rho' = j_{0,2} / (2 pi).
    const double rp = bessel_zero(Order::integer(0), 2) / (2.0 * kPi);
    const double m = std::abs(transform_at(c01, {rp, 0.0}));
    CHECK(std::abs(m - 2.0 * kPi * std::abs(j(0, kPi * rp))) < 1e-9);
    CHECK(m > 0.05);
}

TEST_CASE("perturbed radius is an anti-certificate") {
    for (int k : {0, 2}) {
        const double z1 = bessel_zero(Order::integer(static_cast<unsigned>(k)), 1);
        const double z2 = bessel_zero(Order::integer(static_cast<unsigned>(k)), 2);
        const Certificate bad = circle_circle_certificate(k, 0.5 * (z1 + z2) / kPi);
        const VerifyReport r = verify_certificate(bad);
        CHECK_FALSE(r.passed);
        CHECK(r.residual > 1e-3);
    }
}

TEST_CASE("hyperbola and a line") {
    const Certificate c = hyperbola_line_annihilator();
    check_passes(c);
    CHECK(c.residual_on_lambda < 1e-8);
    const Density& g = c.measure.densities[0];
    for (double t : {0.1, 0.7, 1.9, 3.0}) CHECK(g(-t) == -g(t));

    // The transform at (0, 1) is nonzero but small; (0, 1/2) clears the threshold.
    const double at_one = std::abs(transform_at(c, {0.0, 1.0}));
    CHECK(at_one > 1e-3);
    CHECK(at_one < 0.05);
    CHECK(std::abs(transform_at(c, {0.0, 0.5})) > 0.4);

    // Adding an even part breaks the annihilation.
    Certificate perturbed = c;
    perturbed.measure.densities[0] = parse("(sqrt(cosh(2*t))*sin(t) + 0.1*cos(t))*chi(-pi,pi)(t)");
    const VerifyReport r = verify_certificate(perturbed);
    CHECK_FALSE(r.passed);
    CHECK(r.residual > 1e-6);
}

TEST_CASE("exponential curve and a vertical line") {
    const Certificate c = expcurve_vertical_line_annihilator();
    check_passes(c);
    CHECK(c.residual_on_lambda < 1e-8);
    // Witness: the transform of sin t e^{-t^2} at xi = 1 under the pi convention.
    const double e1 = std::exp(-(kPi - 1) * (kPi - 1) / 4), e2 = std::exp(-(kPi + 1) * (kPi + 1) / 4);
    const double oracle = std::sqrt(kPi) / 2.0 * (e1 - e2);
    CHECK(std::abs(c.witness_magnitude - oracle) < 1e-9);

    // Any second vertical line x = x0 meets the x-axis, where the transform is
    // the (nonzero) transform of g at x0.
    for (double x0 : {-1.0, 0.5, 1.5}) CHECK(std::abs(transform_at(c, {x0, 0.0})) > 1e-3);
}

TEST_CASE("four lines with one fiber") {
    for (int p : {3, 4, 5, 6, 8})
        for (double eta0 : {0.0, 0.5, 1.3}) {
            const Certificate c = fourlines_annihilator(p, eta0);
            check_passes(c);
            CHECK(c.residual_on_lambda < 1e-9);
            CHECK(std::abs(c.witness_magnitude - 2.0) < 1e-9);
        }
    // Odd p: the alternative witness eta0 + 1 also works.
    const Certificate c = fourlines_annihilator(3, 0.0);
    CHECK(std::abs(std::abs(transform_at(c, {0.0, 1.0})) - 2.0) < 1e-9);
    CHECK_THROWS_AS(fourlines_annihilator(2, 0.0), InvalidArgument);
}

TEST_CASE("zero measures are rejected") {
    Certificate c = circle_line_annihilator();
    c.measure.densities[0] = parse("0");
    const VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.passed);
    CHECK(r.witness == 0.0);
    CHECK_FALSE(r.error.empty());
}

TEST_CASE("verdict catalog") {
    PairDescriptor lc = pair(PairKind::HyperbolaLatticeCross);
    lc.alpha = 1;
    lc.beta = 1;
    CHECK(known_pair_verdict(lc).answer == Answer::HUP);
    lc.alpha = 2;
    lc.beta = 0.6;
    CHECK(known_pair_verdict(lc).answer == Answer::NotHUP);
    CHECK_FALSE(certificate_for(lc).has_value());
    lc.beta = 2;
    lc.alpha = 1;
    CHECK(known_pair_verdict(lc).answer == Answer::NotHUP);

    PairDescriptor lines = pair(PairKind::CircleConcurrentLines);
    lines.angle = AngleSpec::parse("1/3");
    CHECK(known_pair_verdict(lines).answer == Answer::NotHUP);
    lines.angle = AngleSpec::parse("irrational");
    CHECK(known_pair_verdict(lines).answer == Answer::HUP);
    lines.angle = AngleSpec::parse("0.3333333333");
    CHECK(known_pair_verdict(lines).answer == Answer::Unknown);
    CHECK(AngleSpec::parse("2/6").den == 3);

    PairDescriptor cc = pair(PairKind::CircleCircle);
    cc.radius = bessel_zero(Order::integer(1), 1) / kPi;
    CHECK(known_pair_verdict(cc).answer == Answer::NotHUP);
    cc.radius = 0.5;
    CHECK(known_pair_verdict(cc).answer == Answer::HUP);

    PairDescriptor sph = pair(PairKind::SphereSphere);
    sph.dimension = 3;
    sph.radius = 1.0;  // J_{1/2}(pi) = 0
    CHECK(known_pair_verdict(sph).answer == Answer::NotHUP);
    sph.radius = 0.7;
    CHECK(known_pair_verdict(sph).answer == Answer::HUP);

    PairDescriptor par = pair(PairKind::ParabolaLine);
    par.direction = {1, 0};
    CHECK(known_pair_verdict(par).answer == Answer::HUP);
    par.direction = {1, 1};
    CHECK(known_pair_verdict(par).answer == Answer::NotHUP);

    PairDescriptor ph = pair(PairKind::ParaboloidHyperplane);
    ph.dimension = 3;
    ph.normal = {0, 0, 1};
    CHECK(known_pair_verdict(ph).answer == Answer::HUP);
    ph.normal = {0, 1, 1};
    CHECK(known_pair_verdict(ph).answer == Answer::NotHUP);

    PairDescriptor ang = pair(PairKind::HyperbolaTwoLinesAtAngle);
    ang.angle = AngleSpec::parse("1/8");
    CHECK(known_pair_verdict(ang).answer == Answer::HUP);

    for (PairKind k : {PairKind::CircleParallelLines, PairKind::CircleSpiral, PairKind::ParabolaTwoLines,
                       PairKind::SpiralAntiSpiral, PairKind::ExpCurveHorizontalLine, PairKind::ExpCurveTwoVerticalLines,
                       PairKind::HyperbolaBranchReflected, PairKind::HyperbolaTwoHorizontalLines})
        CHECK(known_pair_verdict(pair(k)).answer == Answer::HUP);
    for (PairKind k : {PairKind::CircleLine, PairKind::ExpCurveVerticalLine, PairKind::HyperbolaHorizontalLine,
                       PairKind::FourLinesSingleFiber})
        CHECK(known_pair_verdict(pair(k)).answer == Answer::NotHUP);

    for (const std::string& name : pair_names()) {
        const auto k = pair_from_name(name);
        REQUIRE(k.has_value());
        CHECK(pair_name(*k) == name);
    }
    CHECK_FALSE(pair_from_name("circle-square").has_value());
}

TEST_CASE("NotHUP verdicts with a constructor come with a passing certificate") {
    std::vector<PairDescriptor> cases = {pair(PairKind::CircleLine), pair(PairKind::ExpCurveVerticalLine),
                                         pair(PairKind::HyperbolaHorizontalLine), pair(PairKind::FourLinesSingleFiber)};
    PairDescriptor lines = pair(PairKind::CircleConcurrentLines);
    lines.angle = AngleSpec::parse("2/5");
    cases.push_back(lines);
    PairDescriptor cc = pair(PairKind::CircleCircle);
    cc.radius = bessel_zero(Order::integer(3), 2) / kPi;
    cases.push_back(cc);
    for (const PairDescriptor& d : cases) {
        const Verdict v = known_pair_verdict(d);
        REQUIRE(v.answer == Answer::NotHUP);
        REQUIRE(v.certificate.has_value());
        const auto c = certificate_for(d);
        REQUIRE(c.has_value());
        CHECK_MESSAGE(verify_certificate(*c).passed, c->name);
    }
}
