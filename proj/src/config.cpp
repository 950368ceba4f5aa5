#include "huplab/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <set>

#include "huplab/error.hpp"

namespace huplab {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be an object");
}

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    require_object(j, where);
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' in " + where);
}

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ConfigError(where + " is missing '" + key + "'");
    return j.at(key);
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(where + " must be finite");
    return v;
}

std::size_t count(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ConfigError(where + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

std::vector<double> numbers(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + " must be an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Point point(const json& j, const std::string& where) {
    const auto v = numbers(j, where);
    if (v.size() != 2) throw ConfigError(where + " must have two entries");
    return {v[0], v[1]};
}

std::string text(const json& j, const std::string& where) {
    if (!j.is_string()) throw ConfigError(where + " must be a string");
    return j.get<std::string>();
}

Envelope parse_decay(const json& j) {
    const std::string type = text(need(j, "type", "decay"), "decay.type");
    if (type == "none") {
        allow_keys(j, "decay", {"type"});
        return Envelope::none();
    }
    if (type == "compact") {
        allow_keys(j, "decay", {"type", "a", "b"});
        return Envelope::compact(number(need(j, "a", "decay"), "decay.a"), number(need(j, "b", "decay"), "decay.b"));
    }
    if (type == "exp" || type == "gaussian") {
        allow_keys(j, "decay", {"type", "rate", "scale"});
        const double rate = j.contains("rate") ? number(j["rate"], "decay.rate") : 1.0;
        const double scale = j.contains("scale") ? number(j["scale"], "decay.scale") : 1.0;
        return type == "exp" ? Envelope::exp_decay(rate, scale) : Envelope::gaussian(rate, scale);
    }
    throw ConfigError("unknown decay type '" + type + "'");
}

ParamCurve parse_curve(const json& j, Envelope* decay) {
    allow_keys(j, "curve", {"type", "heights", "x", "y", "domain", "translate", "decay"});
    const std::string type = text(need(j, "type", "curve"), "curve.type");
    const bool lines = type == "parallel-lines";
    const bool generic = type == "expr" || type == "generic";
    for (const char* k : {"heights", "x", "y", "domain"}) {
        const bool applies = std::string(k) == "heights" ? lines : generic;
        if (!applies && j.contains(k)) throw ConfigError("key '" + std::string(k) + "' does not apply to curve " + type);
    }
    std::optional<ParamCurve> c;
    if (type == "circle") c = ParamCurve::circle();
    else if (type == "hyperbola-branch") c = ParamCurve::hyperbola_branch();
    else if (type == "hyperbola-full" || type == "hyperbola") c = ParamCurve::hyperbola_full();
    else if (type == "spiral") c = ParamCurve::spiral();
    else if (type == "anti-spiral") c = ParamCurve::anti_spiral();
    else if (type == "exp-curve") c = ParamCurve::exp_curve();
    else if (type == "parabola") c = ParamCurve::parabola();
    else if (lines) c = ParamCurve::parallel_lines(numbers(need(j, "heights", "curve"), "curve.heights"));
    else if (generic) {
        const auto dom = numbers(need(j, "domain", "curve"), "curve.domain");
        if (dom.size() != 2) throw ConfigError("curve.domain must have two entries");
        c = ParamCurve::generic(parse(text(need(j, "x", "curve"), "curve.x")),
                                parse(text(need(j, "y", "curve"), "curve.y")), {dom[0], dom[1]});
    } else {
        throw ConfigError("unknown curve type '" + type + "'");
    }
    if (j.contains("translate")) c = c->translated(point(j["translate"], "curve.translate"));
    *decay = j.contains("decay") ? parse_decay(j["decay"]) : Envelope::none();
    return *c;
}

Density parse_density(const json& j, const std::string& where) {
    if (j.is_string()) return Density::from_text(j.get<std::string>());
    allow_keys(j, where, {"t", "re", "im"});
    Tabulated tab;
    tab.t = numbers(need(j, "t", where), where + ".t");
    const auto re = numbers(need(j, "re", where), where + ".re");
    const auto im = j.contains("im") ? numbers(j["im"], where + ".im") : std::vector<double>(re.size(), 0.0);
    if (re.size() != tab.t.size() || im.size() != tab.t.size())
        throw ConfigError(where + ": t, re and im must have equal lengths");
    for (std::size_t i = 0; i < re.size(); ++i) tab.values.emplace_back(re[i], im[i]);
    return Density(std::move(tab));
}

PlanarSet parse_set(const json& j, const std::string& where);

std::vector<PlanarSet> parse_parts(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + " must be an array");
    std::vector<PlanarSet> parts;
    for (std::size_t i = 0; i < j.size(); ++i) parts.push_back(parse_set(j[i], where + "[" + std::to_string(i) + "]"));
    return parts;
}

PlanarSet parse_set(const json& j, const std::string& where) {
    require_object(j, where);
    const std::string type = text(need(j, "type", where), where + ".type");
    PlanarSet s;
    if (type == "line") {
        allow_keys(j, where, {"type", "point", "direction", "n", "window"});
        s.shape = Line{j.contains("point") ? point(j["point"], where + ".point") : Point{},
                       point(need(j, "direction", where), where + ".direction")};
    } else if (type == "circle") {
        allow_keys(j, where, {"type", "radius", "n", "window"});
        s.shape = CircleSet{number(need(j, "radius", where), where + ".radius")};
    } else if (type == "lattice-cross") {
        allow_keys(j, where, {"type", "alpha", "beta", "n", "window"});
        s.shape = LatticeCross{number(need(j, "alpha", where), where + ".alpha"),
                               number(need(j, "beta", where), where + ".beta")};
    } else if (type == "curve") {
        allow_keys(j, where, {"type", "curve", "n", "window"});
        Envelope unused;
        s.shape = CurveSet{parse_curve(need(j, "curve", where), &unused)};
    } else if (type == "fibers") {
        allow_keys(j, where, {"type", "fibers", "periodic", "n", "window"});
        FiberList fl;
        const json& arr = need(j, "fibers", where);
        if (!arr.is_array()) throw ConfigError(where + ".fibers must be an array");
        for (const json& f : arr) {
            allow_keys(f, where + ".fibers[]", {"xi", "etas"});
            fl.fibers.push_back({number(need(f, "xi", "fiber"), "fiber.xi"), numbers(need(f, "etas", "fiber"), "fiber.etas")});
        }
        if (j.contains("periodic")) fl.periodic2 = j["periodic"].get<bool>();
        s.shape = std::move(fl);
    } else if (type == "horizontal-lines") {
        allow_keys(j, where, {"type", "etas", "periodic", "n", "window"});
        HorizontalLines hl{numbers(need(j, "etas", where), where + ".etas"), true};
        if (j.contains("periodic")) hl.periodic2 = j["periodic"].get<bool>();
        s.shape = std::move(hl);
    } else if (type == "union") {
        allow_keys(j, where, {"type", "parts", "n", "window"});
        s.shape = SetUnion{parse_parts(need(j, "parts", where), where + ".parts")};
    } else {
        throw ConfigError("unknown set type '" + type + "'");
    }
    s.validate();
    return s;
}

GridAxis parse_axis(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) throw ConfigError(where + " must be [min, max, n]");
    GridAxis a{number(j[0], where + "[0]"), number(j[1], where + "[1]"), count(j[2], where + "[2]")};
    if (a.n == 0) throw ConfigError(where + " has no points");
    if (a.min > a.max) throw ConfigError(where + " has min > max");
    return a;
}

}  // namespace

std::vector<double> GridAxis::values() const {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = n == 1 ? min : (i + 1 == n ? max : min + (max - min) * static_cast<double>(i) / static_cast<double>(n - 1));
    return v;
}

std::vector<Point> RunConfig::points() const {
    if (lambda) return sample_set(lambda->set, lambda->n, lambda->window);
    std::vector<Point> pts;
    for (double x : xi->values())
        for (double y : eta->values()) pts.push_back({x, y});
    return pts;
}

RunConfig parse_run_config(const json& doc) {
    allow_keys(doc, "config", {"curve", "density", "lambda", "grid", "quad", "output"});
    try {
        Envelope decay;
        ParamCurve curve = parse_curve(need(doc, "curve", "config"), &decay);
        const json& dens = need(doc, "density", "config");
        std::vector<Density> densities;
        if (dens.is_array()) {
            for (std::size_t i = 0; i < dens.size(); ++i)
                densities.push_back(parse_density(dens[i], "density[" + std::to_string(i) + "]"));
        } else {
            densities.push_back(parse_density(dens, "density"));
        }
        RunConfig cfg{Measure{std::move(curve), std::move(densities), decay}, {}, {}, {}, {}, RunConfig::Output::Csv};
        cfg.measure.validate();

        if (doc.contains("grid") == doc.contains("lambda")) throw ConfigError("exactly one of 'grid' and 'lambda' is required");
        if (doc.contains("grid")) {
            const json& g = doc["grid"];
            allow_keys(g, "grid", {"xi", "eta"});
            cfg.xi = parse_axis(need(g, "xi", "grid"), "grid.xi");
            cfg.eta = parse_axis(need(g, "eta", "grid"), "grid.eta");
        } else {
            const json& l = doc["lambda"];
            LambdaSpec spec{parse_set(l, "lambda"), count(need(l, "n", "lambda"), "lambda.n"), {}};
            if (spec.n == 0) throw ConfigError("lambda.n must be positive");
            const auto w = numbers(need(l, "window", "lambda"), "lambda.window");
            if (w.size() != 4) throw ConfigError("lambda.window must be [x0, x1, y0, y1]");
            spec.window = {w[0], w[1], w[2], w[3]};
            cfg.lambda = std::move(spec);
        }
        if (doc.contains("quad")) {
            const json& q = doc["quad"];
            allow_keys(q, "quad", {"abs_tol", "rel_tol", "max_subdivisions"});
            if (q.contains("abs_tol")) cfg.quad.abs_tol = number(q["abs_tol"], "quad.abs_tol");
            if (q.contains("rel_tol")) cfg.quad.rel_tol = number(q["rel_tol"], "quad.rel_tol");
            if (q.contains("max_subdivisions")) cfg.quad.max_subdivisions = count(q["max_subdivisions"], "quad.max_subdivisions");
            cfg.quad.validate();
        }
        if (doc.contains("output")) {
            const std::string o = text(doc["output"], "output");
            if (o == "csv") cfg.output = RunConfig::Output::Csv;
            else if (o == "json") cfg.output = RunConfig::Output::Json;
            else throw ConfigError("output must be 'csv' or 'json'");
        }
        if (cfg.lambda) (void)cfg.points();  // empty intersections are configuration errors
        return cfg;
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    } catch (const json::exception& e) {
        throw ConfigError(e.what());
    }
}

RunConfig parse_run_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    return parse_run_config(doc);
}

cplx parse_complex(const json& v) {
    if (v.is_number()) return {number(v, "value"), 0.0};
    if (v.is_array()) {
        const Point p = point(v, "value");
        return {p.x, p.y};
    }
    if (v.is_string()) {
        try {
            return parse(v.get<std::string>()).eval(0.0);
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
    }
    throw ConfigError("complex value must be a number, [re, im] or an expression");
}

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string format_double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json complex_json(cplx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }  // no negative zeros

json to_json(const Envelope& e) {
    switch (e.kind) {
        case Envelope::Kind::None: return {{"type", "none"}};
        case Envelope::Kind::CompactSupport: return {{"type", "compact"}, {"a", e.a}, {"b", e.b}};
        case Envelope::Kind::ExpDecay: return {{"type", "exp"}, {"rate", e.rate}, {"scale", e.scale}, {"center", e.center}};
        case Envelope::Kind::GaussianDecay:
            return {{"type", "gaussian"}, {"rate", e.rate}, {"scale", e.scale}, {"center", e.center}};
    }
    return nullptr;
}

json to_json(const Measure& mu) {
    json d = json::array();
    for (const Density& g : mu.densities) d.push_back(g.describe());
    json out{{"curve", mu.curve.name()}, {"densities", d}, {"decay", to_json(mu.decay)}};
    if (mu.curve.kind() == CurveKind::ParallelLines) out["heights"] = mu.curve.heights();
    if (mu.curve.offset() != Point{}) out["translate"] = {mu.curve.offset().x, mu.curve.offset().y};
    return out;
}

json to_json(const PlanarSet& s) {
    return std::visit(
        [&](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Line>)
                return {{"type", "line"}, {"point", {v.point.x, v.point.y}}, {"direction", {v.direction.x, v.direction.y}}};
            else if constexpr (std::is_same_v<T, CircleSet>)
                return {{"type", "circle"}, {"radius", v.radius}};
            else if constexpr (std::is_same_v<T, LatticeCross>)
                return {{"type", "lattice-cross"}, {"alpha", v.alpha}, {"beta", v.beta}};
            else if constexpr (std::is_same_v<T, CurveSet>)
                return {{"type", "curve"}, {"curve", v.curve.name()}};
            else if constexpr (std::is_same_v<T, FiberList>) {
                json f = json::array();
                for (const FiberPoint& p : v.fibers) f.push_back({{"xi", p.xi}, {"etas", p.etas}});
                return {{"type", "fibers"}, {"fibers", f}, {"periodic", v.periodic2}};
            } else if constexpr (std::is_same_v<T, HorizontalLines>)
                return {{"type", "horizontal-lines"}, {"etas", v.etas}, {"periodic", v.periodic2}};
            else {
                json parts = json::array();
                for (const PlanarSet& p : v.parts) parts.push_back(to_json(p));
                return {{"type", "union"}, {"parts", parts}};
            }
        },
        s.shape);
}

json to_json(const Certificate& c) {
    return {{"case", c.name},
            {"measure", to_json(c.measure)},
            {"lambda", to_json(c.lambda)},
            {"window", {c.window.x0, c.window.x1, c.window.y0, c.window.y1}},
            {"witness_point", {c.witness.x, c.witness.y}},
            {"residual_on_lambda", c.residual_on_lambda},
            {"witness_magnitude", c.witness_magnitude},
            {"samples_used", c.samples_used},
            {"total_variation", c.total_variation},
            {"reference", c.reference}};
}

json to_json(const VerifyReport& r) {
    json out{{"passed", r.passed}, {"residual", r.residual}, {"witness_magnitude", r.witness}, {"samples", r.samples}};
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

json to_json(const Verdict& v) {
    json out{{"answer", to_string(v.answer)}, {"citation", v.citation}, {"condition", v.condition}};
    if (v.certificate) out["certificate"] = *v.certificate;
    return out;
}

json to_json(const Classification& c) { return {{"class", to_string(c.tag)}, {"witness", c.witness}}; }

json to_json(const NonzeroReport& r) {
    json orders = json::array();
    for (const Order& o : r.checked) orders.push_back(o.value());
    json out{{"all_nonzero", r.all_nonzero}, {"checked_orders", orders}};
    if (r.vanishing) out["vanishing_order"] = r.vanishing->value();
    return out;
}

}  // namespace huplab
