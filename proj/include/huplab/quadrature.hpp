#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>

namespace huplab {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed interval of the real line; either end may be infinite.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool bounded() const { return lo > -kInf && hi < kInf; }
    bool empty() const { return !(lo < hi); }
    double length() const { return hi - lo; }
    bool contains(double t) const { return lo <= t && t <= hi; }
};

/// Declared bound |g(t)| <= envelope(t) on a density. Decay families are
/// centred at `center`; compact support is the open interval (a, b).
struct Envelope {
    enum class Kind { None, CompactSupport, ExpDecay, GaussianDecay };

    Kind kind = Kind::None;
    double a = 0.0, b = 0.0;  // CompactSupport
    double rate = 1.0;        // ExpDecay: scale*exp(-rate|t-c|), Gaussian: scale*exp(-rate (t-c)^2)
    double scale = 1.0;
    double center = 0.0;

    static Envelope none() { return {}; }
    static Envelope compact(double a, double b);
    static Envelope exp_decay(double rate, double scale = 1.0);
    static Envelope gaussian(double rate = 1.0, double scale = 1.0);

    /// Same envelope for t -> g(t + d).
    Envelope shifted(double d) const;

    /// Pointwise bound; +inf where the envelope says nothing (Kind::None or
    /// inside a compact support).
    double bound(double t) const;

    /// Integral of the decay bound over [center + r, inf) for r >= 0.
    double tail_mass(double r) const;

    bool limits_support() const { return kind != Kind::None; }
};

struct QuadOpts {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    std::size_t max_subdivisions = std::size_t{1} << 16;
    /// Frequency scale omega; panels are pre-split to width <= pi/omega.
    std::optional<double> oscillation_hint;
    /// Integrate f(t) + f(-t) over [0, T] when the (truncated) interval is
    /// [-T, T]. Odd integrands then cancel exactly.
    bool fold_symmetric = true;

    void validate() const;
};

struct QuadResult {
    cplx value;
    double err_estimate = 0.0;
    Interval window;  // interval actually integrated
    std::size_t panels = 0;
};

/// Finite window to integrate after truncating the envelope's tails (each
/// dropped tail carries at most abs_tol/10). `tail_err` receives the summed
/// bound of the dropped tails. Throws InvalidArgument for an unbounded
/// interval without a support-limiting envelope.
Interval truncation_window(Interval interval, const std::optional<Envelope>& envelope, double abs_tol,
                           double* tail_err = nullptr);

using Integrand = std::function<cplx(double)>;

/// Adaptive Gauss-Kronrod (7/15) integration with worst-panel bisection.
/// Throws QuadratureError carrying the worst panel when the tolerance is not
/// met within opts.max_subdivisions panels.
QuadResult integrate(const Integrand& f, Interval interval, const QuadOpts& opts = {},
                     const std::optional<Envelope>& envelope = std::nullopt);

}  // namespace huplab
