#include <doctest.h>

#include <cmath>

#include "huplab/config.hpp"
#include "test_support.hpp"

using namespace huplab;
using nlohmann::json;

namespace {

json circle_doc() {
    return json::parse(R"J({
        "curve": {"type": "circle"},
        "density": "1/(2*pi)",
        "grid": {"xi": [0, 1, 3], "eta": [0, 0, 1]}
    })J");
}

}  // namespace

TEST_CASE("grid configs") {
    const RunConfig cfg = parse_run_config(circle_doc());
    CHECK(cfg.output == RunConfig::Output::Csv);
    const std::vector<Point> pts = cfg.points();
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == Point{0, 0});
    CHECK(pts[1] == Point{0.5, 0});
    CHECK(pts[2] == Point{1, 0});

    json two = circle_doc();
    two["grid"]["eta"] = {-1, 1, 2};
    two["output"] = "json";
    two["quad"] = {{"abs_tol", 1e-12}, {"rel_tol", 1e-11}};
    const RunConfig c2 = parse_run_config(two);
    CHECK(c2.output == RunConfig::Output::Json);
    CHECK(c2.quad.abs_tol == 1e-12);
    const std::vector<Point> p2 = c2.points();
    REQUIRE(p2.size() == 6);
    // xi outer, eta inner.
    CHECK(p2[0] == Point{0, -1});
    CHECK(p2[1] == Point{0, 1});
    CHECK(p2[2] == Point{0.5, -1});
}

TEST_CASE("lambda configs") {
    const json doc = json::parse(R"J({
        "curve": {"type": "hyperbola-full", "decay": {"type": "compact", "a": -3.14159, "b": 3.14159}},
        "density": "sqrt(cosh(2*t))*sin(t)*chi(-pi,pi)(t)",
        "lambda": {"type": "line", "direction": [1, 0], "n": 17, "window": [-8, 8, -1, 1]}
    })J");
    const RunConfig cfg = parse_run_config(doc);
    CHECK(cfg.points().size() == 17);
    CHECK(cfg.measure.decay.kind == Envelope::Kind::CompactSupport);

    const json lines = json::parse(R"J({
        "curve": {"type": "parallel-lines", "heights": [0, 1, 2, 3], "decay": {"type": "compact", "a": -1, "b": 1}},
        "density": ["1", "0", "0", {"t": [-1, 0, 1], "re": [0, 1, 0]}],
        "lambda": {"type": "union", "n": 5, "window": [-1, 1, -1, 1],
                   "parts": [{"type": "horizontal-lines", "etas": [0.5]},
                             {"type": "fibers", "fibers": [{"xi": 0, "etas": [0.25]}], "periodic": false}]}
    })J");
    const RunConfig c2 = parse_run_config(lines);
    CHECK(c2.measure.densities.size() == 4);
    CHECK(c2.points().size() == 5 + 1);
}

TEST_CASE("decay envelopes") {
    json doc = circle_doc();
    doc["curve"] = json::parse(R"J({"type": "exp-curve", "decay": {"type": "gaussian", "rate": 1, "scale": 1}})J");
    doc["density"] = "sin(t)*exp(-t^2)";
    CHECK(parse_run_config(doc).measure.decay.kind == Envelope::Kind::GaussianDecay);
    doc["curve"]["decay"] = json::parse(R"J({"type": "exp", "rate": 2})J");
    CHECK(parse_run_config(doc).measure.decay.kind == Envelope::Kind::ExpDecay);
    doc["curve"].erase("decay");
    CHECK_THROWS_AS(parse_run_config(doc), ConfigError);
}

TEST_CASE("rejections") {
    json extra = circle_doc();
    extra["colour"] = "blue";
    CHECK_THROWS_AS(parse_run_config(extra), ConfigError);

    json nested = circle_doc();
    nested["grid"]["zeta"] = {0, 1, 2};
    CHECK_THROWS_AS(parse_run_config(nested), ConfigError);

    json empty = circle_doc();
    empty["grid"]["xi"] = {0, 1, 0};
    CHECK_THROWS_AS(parse_run_config(empty), ConfigError);

    json both = circle_doc();
    both["lambda"] = json::parse(R"J({"type": "circle", "radius": 1, "n": 4, "window": [-2, 2, -2, 2]})J");
    CHECK_THROWS_AS(parse_run_config(both), ConfigError);

    json neither = circle_doc();
    neither.erase("grid");
    CHECK_THROWS_AS(parse_run_config(neither), ConfigError);

    json bad_expr = circle_doc();
    bad_expr["density"] = "sin(t";
    CHECK_THROWS_AS(parse_run_config(bad_expr), ConfigError);

    json bad_curve = circle_doc();
    bad_curve["curve"]["type"] = "ellipse";
    CHECK_THROWS_AS(parse_run_config(bad_curve), ConfigError);

    json bad_set = circle_doc();
    bad_set.erase("grid");
    bad_set["lambda"] = json::parse(R"J({"type": "lattice-cross", "alpha": 0, "beta": 1, "n": 1, "window": [-2, 2, -2, 2]})J");
    CHECK_THROWS_AS(parse_run_config(bad_set), ConfigError);

    json miss = circle_doc();
    miss.erase("grid");
    miss["lambda"] = json::parse(R"J({"type": "circle", "radius": 1, "n": 8, "window": [5, 6, 5, 6]})J");
    CHECK_THROWS_AS(parse_run_config(miss), ConfigError);

    json bad_tol = circle_doc();
    bad_tol["quad"] = {{"abs_tol", -1}};
    CHECK_THROWS_AS(parse_run_config(bad_tol), ConfigError);

    CHECK_THROWS_AS(parse_run_config_text("{not json"), ConfigError);
}

TEST_CASE("number formatting and complex literals") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(2.404825557695773) == "2.404825557695773");
    CHECK(format_double17(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(testing::kPi)) == testing::kPi);
    CHECK(parse_complex(json(2.5)) == cplx(2.5));
    CHECK(parse_complex(json::parse("[1, -2]")) == cplx(1, -2));
    CHECK(std::abs(parse_complex(json("exp(i*pi/2)")) - cplx(0, 1)) < 1e-15);
    const json z = complex_json(cplx(1.5, -0.25));
    CHECK(z == json::array({1.5, -0.25}));
    CHECK(complex_json(cplx(-0.0, 0.0)).dump() == "[0.0,0.0]");
}
