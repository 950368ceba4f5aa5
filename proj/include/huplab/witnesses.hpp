#pragma once

// Annihilating measures for the pairs that fail uniqueness, a numeric
// verifier for them, and a table of verdicts for known (curve, set) pairs.

#include <optional>
#include <string>
#include <vector>

#include "huplab/geometry.hpp"
#include "huplab/quadrature.hpp"

namespace huplab {

inline constexpr double kWitnessThreshold = 0.05;
inline constexpr double kLambdaTolerance = 1e-6;
inline constexpr std::size_t kConstructSamples = 256;

/// A nonzero measure whose transform vanishes on lambda, with the residuals
/// measured when it was built.
struct Certificate {
    std::string name;  // case id, e.g. "circle-bessel"
    Measure measure;
    PlanarSet lambda;
    Window window;  // part of lambda that is sampled
    Point witness;  // off lambda, where the transform is large
    double residual_on_lambda = 0.0;
    double witness_magnitude = 0.0;
    std::size_t samples_used = 0;
    double total_variation = 0.0;
    std::string reference;
};

Certificate circle_line_annihilator();
/// f = sin(j theta); lambda is the j lines through 0 at angles m pi / j.
Certificate circle_rational_lines_annihilator(int j);
/// f = e^{ik theta}; lambda is the circle of radius j_{k,n} / pi.
Certificate circle_bessel_circle_annihilator(int k, int n);
/// Same density against a circle of arbitrary radius.
Certificate circle_circle_certificate(int k, double radius);
Certificate hyperbola_line_annihilator();
Certificate expcurve_vertical_line_annihilator();
/// Lines R x {0, 1, 2, p}; lambda = R x (eta0 + 2Z).
Certificate fourlines_annihilator(int p, double eta0);

/// Transform of the measure at a point (default quadrature, errors propagate).
cplx transform_at(const Certificate& c, Point at);

struct VerifyReport {
    bool passed = false;
    double residual = 0.0;  // max |mu^| over the lambda samples
    double witness = 0.0;   // |mu^| at the witness point
    std::size_t samples = 0;
    std::string error;  // quadrature failure or rejection reason
};

/// Recomputes the residual on n_lambda fresh samples of lambda (in parallel)
/// and the witness magnitude. Passes iff residual < tol and witness > 0.05.
/// Quadrature failures and invalid certificates are reported, not thrown.
VerifyReport verify_certificate(const Certificate& c, std::size_t n_lambda = 512, double tol = kLambdaTolerance);

// ---------------------------------------------------------------------------
// Verdicts

enum class Answer { HUP, NotHUP, Unknown };

std::string to_string(Answer a);

/// An angle given as a multiple of pi. Only exact rationals decide
/// rationality; a decimal value never does.
struct AngleSpec {
    enum class Kind { Rational, Irrational, Numeric };

    Kind kind = Kind::Numeric;
    long num = 0, den = 1;  // Rational
    double value = 0.0;     // multiple of pi, for every kind when known

    static AngleSpec rational(long num, long den);
    static AngleSpec irrational(double value = 0.0);
    static AngleSpec numeric(double value);
    /// "a/b" or an integer -> Rational, "irrational" -> Irrational, a decimal -> Numeric.
    static AngleSpec parse(const std::string& text);
};

enum class PairKind {
    HyperbolaLatticeCross,        // alpha, beta
    CircleCircle,                 // radius
    CircleLine,
    CircleParallelLines,
    CircleConcurrentLines,        // angle (multiple of pi between two of the lines)
    CircleSpiral,
    ParabolaLine,                 // direction
    ParabolaTwoLines,
    ParabolaTwoLineSubsets,
    SphereSphere,                 // dimension, radius
    ParaboloidHyperplane,         // dimension, normal
    SpiralAntiSpiral,
    ExpCurveHorizontalLine,
    ExpCurveVerticalLine,
    ExpCurveTwoVerticalLines,
    HyperbolaBranchReflected,
    HyperbolaHorizontalLine,
    HyperbolaTwoHorizontalLines,
    HyperbolaTwoLinesAtAngle,     // angle (multiple of pi)
    FourLinesSingleFiber,         // p, eta0
};

struct PairDescriptor {
    PairKind kind = PairKind::HyperbolaLatticeCross;
    double alpha = 0.0, beta = 0.0;
    double radius = 0.0;
    int dimension = 2;
    AngleSpec angle;
    Point direction{1.0, 0.0};
    std::vector<double> normal;
    int p = 3;
    double eta0 = 0.0;
};

/// Case name used by the CLI ("lattice-cross", "circle-circle", ...).
std::string pair_name(PairKind kind);
std::optional<PairKind> pair_from_name(const std::string& name);
std::vector<std::string> pair_names();

struct Verdict {
    Answer answer = Answer::Unknown;
    std::string citation;
    std::string condition;             // the condition that was evaluated
    std::optional<std::string> certificate;  // annihilate case backing a NotHUP answer
};

Verdict known_pair_verdict(const PairDescriptor& pair);

/// Certificate backing a NotHUP verdict, when this module can construct one.
std::optional<Certificate> certificate_for(const PairDescriptor& pair);

}  // namespace huplab
