// Python bindings. Structured results cross the boundary as JSON text; the
// huplab package turns them back into dicts.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "huplab/bessel.hpp"
#include "huplab/config.hpp"
#include "huplab/error.hpp"
#include "huplab/expr.hpp"
#include "huplab/fourlines.hpp"
#include "huplab/transform.hpp"
#include "huplab/witnesses.hpp"

namespace py = pybind11;
using namespace huplab;

namespace {

Order to_order(double nu) {
    const double twice = 2.0 * nu;
    if (!(nu >= 0.0) || twice != std::floor(twice) || twice > 1e6)
        throw InvalidArgument("order must be a nonnegative integer or half-integer");
    return Order(static_cast<unsigned>(twice));
}

OrderFamily family_of(const std::string& family, int dimension) {
    if (family == "integers") return AllIntegers{};
    if (family == "sphere") return EvenHalfIntegers{dimension};
    throw InvalidArgument("family must be 'integers' or 'sphere'");
}

Certificate build(const std::string& name, int k, int n, int j, double radius, int p, double eta0) {
    if (name == "circle-line") return circle_line_annihilator();
    if (name == "circle-lines") return circle_rational_lines_annihilator(j);
    if (name == "circle-bessel") return circle_bessel_circle_annihilator(k, n);
    if (name == "circle-circle") return circle_circle_certificate(k, radius);
    if (name == "hyperbola-line") return hyperbola_line_annihilator();
    if (name == "expcurve-vertical-line") return expcurve_vertical_line_annihilator();
    if (name == "fourlines") return fourlines_annihilator(p, eta0);
    throw InvalidArgument("unknown case '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_huplab, m) {
    m.doc() = "Fourier uniqueness-pair toolkit: transforms, certificates, four-lines algebra";

    // Translators run most recent first, so the base class goes first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

    m.attr("SCHEMA") = kSchema;

    m.def("eval_expr", [](const std::string& text, double t) { return parse(text).eval(t); }, py::arg("text"),
          py::arg("t") = 0.0);

    m.def("bessel_j", [](double nu, double x) { return bessel_j(to_order(nu), x); }, py::arg("nu"), py::arg("x"));
    m.def("bessel_zero", [](double nu, int n) { return bessel_zero(to_order(nu), n); }, py::arg("nu"), py::arg("n"));
    m.def(
        "orders_nonzero",
        [](double x, const std::string& family, int dimension) {
            return to_json(check_orders_nonzero(x, family_of(family, dimension))).dump();
        },
        py::arg("x"), py::arg("family") = "integers", py::arg("dimension") = 3);

    m.def(
        "ft",
        [](const std::string& config) {
            const RunConfig cfg = parse_run_config_text(config);
            const std::vector<Point> pts = cfg.points();
            std::vector<FTValue> vals;
            {
                py::gil_scoped_release release;
                vals = mu_hat_on_points(cfg.measure, pts, cfg.quad);
            }
            std::vector<std::tuple<double, double, cplx, double>> rows;
            rows.reserve(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) rows.emplace_back(pts[i].x, pts[i].y, vals[i].value, vals[i].err_estimate);
            return rows;
        },
        py::arg("config"), "Evaluate the transform for a JSON run config; rows (xi, eta, value, err).");

    m.def(
        "circle_coeff",
        [](const std::function<cplx(double)>& f, int k) { return circle_coeff(f, k); }, py::arg("f"), py::arg("k"));
    m.def("triangle_ft", &triangle_ft, py::arg("xi"));

    m.def(
        "annihilate",
        [](const std::string& name, int k, int n, int j, double radius, int p, double eta0, std::size_t samples,
           double tol) {
            const Certificate c = build(name, k, n, j, radius, p, eta0);
            VerifyReport r;
            {
                py::gil_scoped_release release;
                r = verify_certificate(c, samples, tol);
            }
            return nlohmann::json{{"certificate", to_json(c)}, {"verify", to_json(r)}}.dump();
        },
        py::arg("name"), py::arg("k") = 0, py::arg("n") = 1, py::arg("j") = 1, py::arg("radius") = 1.0,
        py::arg("p") = 3, py::arg("eta0") = 0.0, py::arg("samples") = 512, py::arg("tol") = kLambdaTolerance);

    m.def("pair_names", &pair_names);
    m.def(
        "verdict",
        [](const std::string& pair, double alpha, double beta, double radius, int dimension, const std::string& angle,
           std::pair<double, double> direction, std::vector<double> normal, int p, double eta0) {
            const auto kind = pair_from_name(pair);
            if (!kind) throw InvalidArgument("unknown pair '" + pair + "'");
            PairDescriptor d;
            d.kind = *kind;
            d.alpha = alpha;
            d.beta = beta;
            d.radius = radius;
            d.dimension = dimension;
            if (!angle.empty()) d.angle = AngleSpec::parse(angle);
            d.direction = {direction.first, direction.second};
            d.normal = std::move(normal);
            d.p = p;
            d.eta0 = eta0;
            return to_json(known_pair_verdict(d)).dump();
        },
        py::arg("pair"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("radius") = 0.0,
        py::arg("dimension") = 2, py::arg("angle") = "", py::arg("direction") = std::pair<double, double>{1.0, 0.0},
        py::arg("normal") = std::vector<double>{}, py::arg("p") = 3, py::arg("eta0") = 0.0);

    m.def("homog_sym", &homog_sym, py::arg("k"), py::arg("vals"));
    m.def("vandermonde3_det", &vandermonde3_det);
    m.def("solve_tau", &solve_tau, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p"));
    m.def("solve_delta", &solve_delta, py::arg("chi0"), py::arg("chi1"));
    m.def("solve_e", &solve_e, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("rho", &rho, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "classify",
        [](std::vector<double> sigma, int p) {
            const Fiber f{0.0, std::move(sigma)};
            f.validate();
            FourLinesConfig cfg{p};
            cfg.validate();
            const Classification c = classify(f, cfg);
            return std::make_pair(to_string(c.tag), c.witness);
        },
        py::arg("sigma"), py::arg("p"));
}
