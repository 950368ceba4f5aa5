// huplab: transforms of measures on curves, annihilating certificates,
// four-lines algebra, Bessel utilities and uniqueness verdicts.
//
// Exit codes: 0 ok, 2 configuration error, 3 numeric failure,
// 4 certificate failed verification.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "huplab/bessel.hpp"
#include "huplab/config.hpp"
#include "huplab/error.hpp"
#include "huplab/fourlines.hpp"
#include "huplab/parallel.hpp"
#include "huplab/transform.hpp"
#include "huplab/witnesses.hpp"

using namespace huplab;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kConfig = 2, kNumeric = 3, kCertificate = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
}

void emit_json(json doc) {
    doc["schema"] = kSchema;
    std::cout << doc.dump(2) << '\n';
}

std::string cplx_text(cplx z) {
    return format_double(z.real() + 0.0) + (std::signbit(z.imag()) ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

// ---------------------------------------------------------------------------
// ft

struct FtArgs {
    std::string config;
    std::string output;
};

int run_ft(const FtArgs& a) {
    RunConfig cfg = parse_run_config_text(read_input(a.config));
    if (a.output == "json") cfg.output = RunConfig::Output::Json;
    else if (a.output == "csv") cfg.output = RunConfig::Output::Csv;
    const std::vector<Point> pts = cfg.points();

    std::vector<FTValue> values(pts.size());
    std::vector<std::string> failures(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        try {
            values[i] = mu_hat(cfg.measure, pts[i].x, pts[i].y, cfg.quad);
        } catch (const Error& e) {
            failures[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (failures[i].empty()) continue;
        std::cerr << "huplab ft: quadrature failed at xi=" << format_double17(pts[i].x)
                  << " eta=" << format_double17(pts[i].y) << ": " << failures[i] << '\n';
        return kNumeric;
    }

    if (cfg.output == RunConfig::Output::Csv) {
        std::string out = "xi,eta,re,im,abs,err\n";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const cplx v = values[i].value;
            for (double x : {pts[i].x, pts[i].y, v.real(), v.imag(), std::abs(v)}) out += format_double17(x) + ",";
            out += format_double17(values[i].err_estimate) + "\n";
        }
        std::cout << out;
        return kOk;
    }
    json rows = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const cplx v = values[i].value;
        rows.push_back({{"xi", pts[i].x},
                        {"eta", pts[i].y},
                        {"re", v.real()},
                        {"im", v.imag()},
                        {"abs", std::abs(v)},
                        {"err", values[i].err_estimate}});
    }
    emit_json({{"command", "ft"}, {"measure", to_json(cfg.measure)}, {"rows", rows}});
    return kOk;
}

// ---------------------------------------------------------------------------
// annihilate

struct AnnihilateArgs {
    std::string name;
    int p = 3;
    double eta0 = 0.0;
    int k = 0;
    int n = 1;
    int j = 1;
    double radius = 1.0;
    std::size_t samples = 512;
    double tol = kLambdaTolerance;
    std::string output = "text";
};

const std::vector<std::string> kCases = {"circle-line", "circle-lines", "circle-bessel", "circle-circle",
                                         "hyperbola-line", "expcurve-vertical-line", "fourlines"};

Certificate build_certificate(const AnnihilateArgs& a) {
    if (a.name == "circle-line") return circle_line_annihilator();
    if (a.name == "circle-lines") return circle_rational_lines_annihilator(a.j);
    if (a.name == "circle-bessel") return circle_bessel_circle_annihilator(a.k, a.n);
    if (a.name == "circle-circle") return circle_circle_certificate(a.k, a.radius);
    if (a.name == "hyperbola-line") return hyperbola_line_annihilator();
    if (a.name == "expcurve-vertical-line") return expcurve_vertical_line_annihilator();
    if (a.name == "fourlines") return fourlines_annihilator(a.p, a.eta0);
    throw UsageError("unknown case '" + a.name + "'");
}

int report_certificate(const Certificate& c, const VerifyReport& r, const std::string& output) {
    if (output == "json") {
        emit_json({{"command", "annihilate"}, {"certificate", to_json(c)}, {"verify", to_json(r)}});
    } else {
        std::cout << "case               " << c.name << '\n'
                  << "measure            " << c.measure.curve.name() << ", densities";
        for (const Density& g : c.measure.densities) std::cout << ' ' << g.describe();
        std::cout << '\n'
                  << "lambda             " << c.lambda.name() << '\n'
                  << "witness point      (" << format_double(c.witness.x) << ", " << format_double(c.witness.y) << ")\n"
                  << "total variation    " << format_double(c.total_variation) << '\n'
                  << "residual on lambda " << format_double(r.residual) << " over " << r.samples << " samples\n"
                  << "witness magnitude  " << format_double(r.witness) << '\n'
                  << "verdict            " << (r.passed ? "PASS" : "FAIL") << '\n';
        if (!r.error.empty()) std::cout << "error              " << r.error << '\n';
    }
    return r.passed ? kOk : kCertificate;
}

int run_annihilate(const AnnihilateArgs& a) {
    const Certificate c = [&] {
        try {
            return build_certificate(a);
        } catch (const InvalidArgument& e) {
            throw ConfigError(e.what());
        }
    }();
    return report_certificate(c, verify_certificate(c, a.samples, a.tol), a.output);
}

// ---------------------------------------------------------------------------
// fourlines

struct FourLinesArgs {
    std::string verb;
    std::string input;
    std::string inline_json;
    int p = 0;
    std::string output = "text";
};

cplx field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ConfigError(std::string("missing '") + key + "'");
    return parse_complex(doc.at(key));
}

std::vector<Fiber> read_fibers(const json& doc) {
    if (doc.contains("points")) {
        std::vector<Point> pts;
        for (const json& p : doc.at("points")) {
            if (!p.is_array() || p.size() != 2) throw ConfigError("points must be [xi, eta] pairs");
            pts.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        return periodize(pts);
    }
    if (!doc.contains("fibers")) throw ConfigError("classify needs 'fibers' or 'points'");
    std::vector<Fiber> out;
    for (const json& f : doc.at("fibers")) {
        Fiber fb{f.at("xi").get<double>(), f.at("sigma").get<std::vector<double>>()};
        try {
            fb.validate();
        } catch (const InvalidArgument& e) {
            throw ConfigError(e.what());
        }
        out.push_back(std::move(fb));
    }
    return out;
}

int run_fourlines(const FourLinesArgs& a) {
    json doc;
    if (!a.inline_json.empty()) doc = parse_json(a.inline_json);
    else if (!a.input.empty()) doc = parse_json(read_input(a.input));
    else throw ConfigError("fourlines needs --input or --json");
    if (!doc.is_object()) throw ConfigError("fourlines input must be a JSON object");
    int p = a.p;
    if (p == 0 && doc.contains("p")) p = doc.at("p").get<int>();

    json out{{"command", "fourlines"}, {"verb", a.verb}};
    std::ostringstream text;
    try {
        if (a.verb == "classify") {
            const FourLinesConfig cfg{p};
            cfg.validate();
            out["p"] = p;
            json rows = json::array();
            for (const Fiber& f : read_fibers(doc)) {
                const Classification c = classify(f, cfg);
                json row = to_json(c);
                row["xi"] = f.xi;
                row["sigma"] = f.sigma;
                rows.push_back(row);
                text << "xi=" << format_double(f.xi) << " " << to_string(c.tag);
                if (!c.witness.empty()) {
                    text << " witness";
                    for (double e : c.witness) text << ' ' << format_double(e);
                }
                text << '\n';
            }
            out["fibers"] = rows;
        } else if (a.verb == "tau") {
            const auto t = solve_tau(field(doc, "a"), field(doc, "b"), field(doc, "c"), p);
            out["p"] = p;
            out["tau"] = {complex_json(t[0]), complex_json(t[1]), complex_json(t[2])};
            text << "tau0 " << cplx_text(t[0]) << "\ntau1 " << cplx_text(t[1]) << "\ntau2 " << cplx_text(t[2]) << '\n';
        } else if (a.verb == "delta") {
            const auto d = solve_delta(field(doc, "chi0"), field(doc, "chi1"));
            out["delta"] = {complex_json(d[0]), complex_json(d[1])};
            text << "delta0 " << cplx_text(d[0]) << "\ndelta1 " << cplx_text(d[1]) << '\n';
        } else if (a.verb == "e") {
            const auto e = solve_e(field(doc, "a"), field(doc, "b"), field(doc, "c"));
            out["e"] = {complex_json(e[0]), complex_json(e[1]), complex_json(e[2])};
            text << "e0 " << cplx_text(e[0]) << "\ne1 " << cplx_text(e[1]) << "\ne2 " << cplx_text(e[2]) << '\n';
        } else if (a.verb == "rho") {
            const cplx r = rho(field(doc, "a"), field(doc, "b"), field(doc, "c"));
            out["rho"] = complex_json(r);
            text << "rho " << cplx_text(r) << '\n';
        } else {
            throw UsageError("unknown verb '" + a.verb + "'");
        }
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    } catch (const json::exception& e) {
        throw ConfigError(e.what());
    }
    if (a.output == "json") emit_json(out);
    else std::cout << text.str();
    return kOk;
}

// ---------------------------------------------------------------------------
// bessel

struct BesselArgs {
    std::string verb;
    std::string order = "0";
    double x = 0.0;
    int n = 1;
    std::string family = "integers";
    int dimension = 2;
    std::string output = "text";
};

Order parse_order(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            if (s.substr(slash + 1) != "2") throw ConfigError("order must be an integer or k/2");
            v = 0.5 * std::stoi(s.substr(0, slash), &used);
            if (used != slash) throw ConfigError("bad order '" + s + "'");
        } else {
            v = std::stod(s, &used);
            if (used != s.size()) throw ConfigError("bad order '" + s + "'");
        }
    } catch (const std::logic_error&) {
        throw ConfigError("bad order '" + s + "'");
    }
    const double twice = 2.0 * v;
    if (!(twice >= 0.0) || twice != std::floor(twice) || twice > 1e6)
        throw ConfigError("order must be a nonnegative integer or half-integer");
    return Order(static_cast<unsigned>(twice));
}

int run_bessel(const BesselArgs& a) {
    json out{{"command", "bessel"}, {"verb", a.verb}};
    std::string text;
    try {
        if (a.verb == "j") {
            const Order nu = parse_order(a.order);
            const double v = bessel_j(nu, a.x);
            out.update({{"order", nu.value()}, {"x", a.x}, {"value", v}});
            text = format_double(v);
        } else if (a.verb == "zero") {
            const Order nu = parse_order(a.order);
            if (a.n < 1) throw ConfigError("--n must be at least 1");
            const double z = bessel_zero(nu, a.n);
            out.update({{"order", nu.value()}, {"n", a.n}, {"value", z}});
            text = format_double(z);
        } else if (a.verb == "nonzero") {
            OrderFamily fam;
            if (a.family == "integers") fam = AllIntegers{};
            else if (a.family == "sphere") fam = EvenHalfIntegers{a.dimension};
            else throw ConfigError("--family must be 'integers' or 'sphere'");
            const NonzeroReport r = check_orders_nonzero(a.x, fam);
            out.update({{"family", a.family}, {"x", a.x}});
            if (a.family == "sphere") out["dimension"] = a.dimension;
            out["report"] = to_json(r);
            text = r.all_nonzero ? "nonzero" : "vanishes at order " + format_double(r.vanishing->value());
        } else {
            throw UsageError("unknown verb '" + a.verb + "'");
        }
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    if (a.output == "json") emit_json(out);
    else std::cout << text << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// verdict

struct VerdictArgs {
    std::string pair;
    double alpha = 0.0, beta = 0.0, radius = 0.0;
    int dimension = 2;
    std::string angle;
    std::vector<double> direction{1.0, 0.0};
    std::vector<double> normal;
    int p = 3;
    double eta0 = 0.0;
    bool certify = false;
    std::string output = "text";
};

int run_verdict(const VerdictArgs& a) {
    const auto kind = pair_from_name(a.pair);
    if (!kind) throw UsageError("unknown pair '" + a.pair + "'");
    PairDescriptor d;
    d.kind = *kind;
    d.alpha = a.alpha;
    d.beta = a.beta;
    d.radius = a.radius;
    d.dimension = a.dimension;
    try {
        if (!a.angle.empty()) d.angle = AngleSpec::parse(a.angle);
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    if (a.direction.size() != 2) throw ConfigError("--direction needs two values");
    d.direction = {a.direction[0], a.direction[1]};
    d.normal = a.normal;
    d.p = a.p;
    d.eta0 = a.eta0;

    const Verdict v = known_pair_verdict(d);
    json out{{"command", "verdict"}, {"pair", a.pair}, {"verdict", to_json(v)}};
    int code = kOk;
    std::optional<VerifyReport> report;
    if (a.certify && v.answer == Answer::NotHUP) {
        if (const auto c = certificate_for(d)) {
            report = verify_certificate(*c);
            out["certificate"] = to_json(*c);
            out["verify"] = to_json(*report);
            if (!report->passed) code = kCertificate;
        }
    }
    if (a.output == "json") {
        emit_json(out);
    } else {
        std::cout << to_string(v.answer) << '\n' << "condition " << v.condition << '\n';
        if (!v.citation.empty()) std::cout << "reference " << v.citation << '\n';
        if (v.certificate) std::cout << "certificate " << *v.certificate << '\n';
        if (report) std::cout << "verify " << (report->passed ? "PASS" : "FAIL") << '\n';
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier transforms of measures on curves and uniqueness-pair certificates", "huplab"};
    app.require_subcommand(1);
    const std::vector<std::string> outputs{"text", "json"};

    FtArgs ft;
    auto* ft_cmd = app.add_subcommand("ft", "Evaluate the Fourier transform of a measure from a JSON config");
    ft_cmd->add_option("--config,-c", ft.config, "Config file, or - for stdin")->required();
    ft_cmd->add_option("--output", ft.output, "csv or json (overrides the config)")
        ->check(CLI::IsMember({"csv", "json"}));

    AnnihilateArgs an;
    auto* an_cmd = app.add_subcommand("annihilate", "Build and verify an annihilating measure");
    an_cmd->add_option("case", an.name, "Case name")->required()->check(CLI::IsMember(kCases));
    an_cmd->add_option("--p", an.p, "Four-lines exponent");
    an_cmd->add_option("--eta0", an.eta0, "Four-lines fiber height");
    an_cmd->add_option("--k", an.k, "Fourier mode on the circle");
    an_cmd->add_option("--n", an.n, "Bessel zero index");
    an_cmd->add_option("--j", an.j, "Number of lines through the origin");
    an_cmd->add_option("--radius", an.radius, "Circle radius for circle-circle");
    an_cmd->add_option("--samples", an.samples, "Lambda samples for verification");
    an_cmd->add_option("--tol", an.tol, "Residual tolerance on lambda");
    an_cmd->add_option("--output", an.output)->check(CLI::IsMember(outputs));

    FourLinesArgs fl;
    auto* fl_cmd = app.add_subcommand("fourlines", "Four-lines algebra: classify | tau | delta | e | rho");
    fl_cmd->add_option("verb", fl.verb)->required()->check(CLI::IsMember({"classify", "tau", "delta", "e", "rho"}));
    fl_cmd->add_option("--input,-i", fl.input, "JSON file, or - for stdin");
    fl_cmd->add_option("--json", fl.inline_json, "Inline JSON document");
    fl_cmd->add_option("--p", fl.p, "Exponent p (overrides the input)");
    fl_cmd->add_option("--output", fl.output)->check(CLI::IsMember(outputs));

    BesselArgs bs;
    auto* bs_cmd = app.add_subcommand("bessel", "Bessel functions: j | zero | nonzero");
    bs_cmd->add_option("verb", bs.verb)->required()->check(CLI::IsMember({"j", "zero", "nonzero"}));
    bs_cmd->add_option("--order", bs.order, "Integer or half-integer order (k/2 accepted)");
    bs_cmd->add_option("--x", bs.x, "Argument");
    bs_cmd->add_option("--n", bs.n, "Zero index");
    bs_cmd->add_option("--family", bs.family, "integers or sphere");
    bs_cmd->add_option("--dimension", bs.dimension, "Sphere dimension n");
    bs_cmd->add_option("--output", bs.output)->check(CLI::IsMember(outputs));

    VerdictArgs vd;
    auto* vd_cmd = app.add_subcommand("verdict", "Uniqueness verdict for a known (curve, set) pair");
    vd_cmd->add_option("pair", vd.pair)->required()->check(CLI::IsMember(pair_names()));
    vd_cmd->add_option("--alpha", vd.alpha);
    vd_cmd->add_option("--beta", vd.beta);
    vd_cmd->add_option("--radius", vd.radius);
    vd_cmd->add_option("--dimension", vd.dimension);
    vd_cmd->add_option("--angle", vd.angle, "Angle as a multiple of pi: a/b, an integer, 'irrational' or a decimal");
    vd_cmd->add_option("--direction", vd.direction)->expected(2)->delimiter(',');
    vd_cmd->add_option("--normal", vd.normal)->delimiter(',');
    vd_cmd->add_option("--p", vd.p);
    vd_cmd->add_option("--eta0", vd.eta0);
    vd_cmd->add_flag("--certify", vd.certify, "Build and verify the backing certificate");
    vd_cmd->add_option("--output", vd.output)->check(CLI::IsMember(outputs));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (ft_cmd->parsed()) return run_ft(ft);
        if (an_cmd->parsed()) return run_annihilate(an);
        if (fl_cmd->parsed()) return run_fourlines(fl);
        if (bs_cmd->parsed()) return run_bessel(bs);
        if (vd_cmd->parsed()) return run_verdict(vd);
    } catch (const ConfigError& e) {
        std::cerr << "huplab: configuration error: " << e.what() << '\n';
        return kConfig;
    } catch (const UsageError& e) {
        std::cerr << "huplab: " << e.what() << '\n';
        return kConfig;
    } catch (const Error& e) {
        std::cerr << "huplab: numeric failure: " << e.what() << '\n';
        return kNumeric;
    }
    return kConfig;
}
