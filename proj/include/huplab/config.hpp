#pragma once

// RunConfig parsing and JSON serialization shared by the CLI and the tests.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "huplab/bessel.hpp"
#include "huplab/error.hpp"
#include "huplab/fourlines.hpp"
#include "huplab/geometry.hpp"
#include "huplab/quadrature.hpp"
#include "huplab/witnesses.hpp"

namespace huplab {

inline constexpr const char* kSchema = "huplab/1";

/// Malformed or inconsistent run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    std::size_t n = 0;

    std::vector<double> values() const;
};

struct LambdaSpec {
    PlanarSet set;
    std::size_t n = 0;
    Window window;
};

struct RunConfig {
    enum class Output { Csv, Json };

    Measure measure;
    std::optional<GridAxis> xi, eta;  // both present, or lambda is
    std::optional<LambdaSpec> lambda;
    QuadOpts quad;
    Output output = Output::Csv;

    /// Grid points with xi outer and eta inner, or the lambda samples.
    std::vector<Point> points() const;
};

/// Validates against the schema; unknown keys are rejected. Throws ConfigError.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig parse_run_config_text(const std::string& text);

/// Number, [re, im] or an expression string without t.
cplx parse_complex(const nlohmann::json& v);

/// Shortest round-trip decimal text.
std::string format_double(double v);
/// "%.17g".
std::string format_double17(double v);

nlohmann::json complex_json(cplx z);
nlohmann::json to_json(const Envelope& e);
nlohmann::json to_json(const Measure& mu);
nlohmann::json to_json(const PlanarSet& s);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const NonzeroReport& r);

}  // namespace huplab
