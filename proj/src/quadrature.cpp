#include "huplab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "huplab/error.hpp"

namespace huplab {

namespace {

// Kronrod 15-point abscissae (descending, last is the centre) and weights;
// the odd-indexed abscissae are the 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

// Pre-splitting stops here even for very large oscillation hints; adaptivity
// takes over below this resolution.
constexpr std::size_t kMaxPresplit = 1024;

struct Panel {
    double lo;
    double hi;
    cplx value;
    double err;
};

// Heap order: largest error on top, ties broken towards the leftmost panel.
struct WorseFirst {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.lo > y.lo;
    }
};

template <class F>
Panel gauss_kronrod(const F& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const cplx fc = f(c);
    cplx kron = kWgk[7] * fc;
    cplx gauss = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int k = 0; k < 7; ++k) {
        const double dx = h * kXgk[k];
        const cplx f1 = f(c - dx);
        const cplx f2 = f(c + dx);
        kron += kWgk[k] * (f1 + f2);
        resabs += kWgk[k] * (std::abs(f1) + std::abs(f2));
        if (k % 2 == 1) gauss += kWg[k / 2] * (f1 + f2);
    }
    kron *= h;
    gauss *= h;
    resabs *= std::abs(h);
    if (!std::isfinite(kron.real()) || !std::isfinite(kron.imag()))
        throw QuadratureError("integrand is not finite on panel", lo, hi);
    const double err = std::abs(kron - gauss) + 4.0 * std::numeric_limits<double>::epsilon() * resabs;
    return {lo, hi, kron, err};
}

double find_cutoff(const Envelope& env, double budget) {
    if (env.kind == Envelope::Kind::ExpDecay) {
        double r = std::max(0.0, std::log(env.scale / (env.rate * budget)) / env.rate);
        while (env.tail_mass(r) >= budget) r = r * (1.0 + 1e-12) + 1e-12;
        return r;
    }
    double hi = 1.0;
    while (env.tail_mass(hi) >= budget) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 80 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (env.tail_mass(mid) < budget ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace

Envelope Envelope::compact(double a, double b) {
    if (!(a < b)) throw InvalidArgument("compact support requires a < b");
    Envelope e;
    e.kind = Kind::CompactSupport;
    e.a = a;
    e.b = b;
    return e;
}

Envelope Envelope::exp_decay(double rate, double scale) {
    if (!(rate > 0.0) || !(scale > 0.0)) throw InvalidArgument("exp decay requires rate > 0 and scale > 0");
    Envelope e;
    e.kind = Kind::ExpDecay;
    e.rate = rate;
    e.scale = scale;
    return e;
}

Envelope Envelope::gaussian(double rate, double scale) {
    if (!(rate > 0.0) || !(scale > 0.0)) throw InvalidArgument("gaussian decay requires rate > 0 and scale > 0");
    Envelope e;
    e.kind = Kind::GaussianDecay;
    e.rate = rate;
    e.scale = scale;
    return e;
}

Envelope Envelope::shifted(double d) const {
    Envelope e = *this;
    e.a -= d;
    e.b -= d;
    e.center -= d;
    return e;
}

double Envelope::bound(double t) const {
    switch (kind) {
        case Kind::None: return kInf;
        case Kind::CompactSupport: return (a < t && t < b) ? kInf : 0.0;
        case Kind::ExpDecay: return scale * std::exp(-rate * std::abs(t - center));
        case Kind::GaussianDecay: return scale * std::exp(-rate * (t - center) * (t - center));
    }
    return kInf;
}

double Envelope::tail_mass(double r) const {
    switch (kind) {
        case Kind::ExpDecay: return scale * std::exp(-rate * r) / rate;
        case Kind::GaussianDecay:
            return scale * 0.5 * std::sqrt(std::numbers::pi / rate) * std::erfc(std::sqrt(rate) * r);
        case Kind::CompactSupport: return 0.0;
        case Kind::None: return kInf;
    }
    return kInf;
}

void QuadOpts::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw InvalidArgument("quadrature tolerances must be positive");
    if (max_subdivisions < 1) throw InvalidArgument("max_subdivisions must be at least 1");
    if (oscillation_hint && !(*oscillation_hint >= 0.0))
        throw InvalidArgument("oscillation hint must be nonnegative");
}

Interval truncation_window(Interval interval, const std::optional<Envelope>& envelope, double abs_tol,
                           double* tail_err) {
    if (tail_err) *tail_err = 0.0;
    if (std::isnan(interval.lo) || std::isnan(interval.hi)) throw InvalidArgument("interval endpoint is NaN");
    const Envelope::Kind kind = envelope ? envelope->kind : Envelope::Kind::None;
    switch (kind) {
        case Envelope::Kind::None:
            if (!interval.bounded())
                throw InvalidArgument("unbounded integration interval requires a decay envelope");
            return interval;
        case Envelope::Kind::CompactSupport:
            return {std::max(interval.lo, envelope->a), std::min(interval.hi, envelope->b)};
        case Envelope::Kind::ExpDecay:
        case Envelope::Kind::GaussianDecay: {
            if (interval.bounded()) return interval;
            const double r = find_cutoff(*envelope, abs_tol / 10.0);
            Interval w = interval;
            int dropped = 0;
            if (!(w.lo > -kInf)) {
                w.lo = envelope->center - r;
                ++dropped;
            }
            if (!(w.hi < kInf)) {
                w.hi = envelope->center + r;
                ++dropped;
            }
            if (tail_err) *tail_err = dropped * envelope->tail_mass(r);
            return w;
        }
    }
    return interval;
}

QuadResult integrate(const Integrand& f, Interval interval, const QuadOpts& opts,
                     const std::optional<Envelope>& envelope) {
    opts.validate();
    double tail_err = 0.0;
    const Interval window = truncation_window(interval, envelope, opts.abs_tol, &tail_err);
    QuadResult result;
    result.window = window;
    if (window.empty()) {
        result.value = 0.0;
        result.err_estimate = tail_err;
        return result;
    }

    const bool folded = opts.fold_symmetric && window.lo < 0.0 && window.lo == -window.hi;
    const double lo = folded ? 0.0 : window.lo;
    const double hi = window.hi;
    const auto eval = [&](double t) -> cplx { return folded ? f(t) + f(-t) : f(t); };

    std::size_t pieces = 1;
    if (opts.oscillation_hint && *opts.oscillation_hint > 0.0) {
        const double want = std::ceil((hi - lo) * *opts.oscillation_hint / std::numbers::pi);
        const double cap = static_cast<double>(std::min(kMaxPresplit, std::max<std::size_t>(1, opts.max_subdivisions / 2)));
        pieces = static_cast<std::size_t>(std::clamp(want, 1.0, cap));
    }

    std::vector<Panel> heap;
    heap.reserve(pieces + 64);
    cplx total = 0.0;
    double total_err = 0.0;
    for (std::size_t k = 0; k < pieces; ++k) {
        const double a = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(pieces);
        const double b = k + 1 == pieces ? hi : lo + (hi - lo) * static_cast<double>(k + 1) / static_cast<double>(pieces);
        Panel p = gauss_kronrod(eval, a, b);
        total += p.value;
        total_err += p.err;
        heap.push_back(p);
    }
    std::make_heap(heap.begin(), heap.end(), WorseFirst{});

    const auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) - tail_err; };

    while (total_err > target()) {
        const Panel worst = heap.front();
        if (heap.size() >= opts.max_subdivisions)
            throw QuadratureError("quadrature did not converge within max_subdivisions; worst panel [" +
                                      std::to_string(worst.lo) + ", " + std::to_string(worst.hi) + "]",
                                  worst.lo, worst.hi);
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(worst.lo < mid && mid < worst.hi))
            throw QuadratureError("quadrature panel cannot be split further near " + std::to_string(worst.lo),
                                  worst.lo, worst.hi);
        std::pop_heap(heap.begin(), heap.end(), WorseFirst{});
        heap.pop_back();
        const Panel left = gauss_kronrod(eval, worst.lo, mid);
        const Panel right = gauss_kronrod(eval, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), WorseFirst{});
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), WorseFirst{});
    }

    // Final sum in positional order so the result does not depend on heap history.
    std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    cplx value = 0.0;
    double err = 0.0;
    for (const Panel& p : heap) {
        value += p.value;
        err += p.err;
    }
    result.value = value;
    result.err_estimate = err + tail_err;
    result.panels = heap.size();
    return result;
}

}  // namespace huplab
