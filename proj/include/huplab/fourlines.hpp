#pragma once

// Algebra for measures on the four parallel lines R x {0, 1, 2, p}:
// symmetric polynomials, the coefficient systems that annihilate fiber
// points a_j = e^{pi i eta_j}, fiber classification, and the polynomial lift.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "huplab/geometry.hpp"

namespace huplab {

inline constexpr double kFiberSeparation = 1e-12;
inline constexpr double kWitnessTolerance = 1e-10;
inline constexpr int kMaxLinesExponent = 64;

/// eta reduced into [0, 2).
double wrap2(double eta);

struct UnitPoint {
    double eta;
    cplx a;  // e^{pi i eta}

    /// Reduces eta into [0, 2) first.
    static UnitPoint at(double eta);
};

struct Fiber {
    double xi = 0.0;
    std::vector<double> sigma;  // sorted, distinct, in [0, 2)

    /// Throws InvalidArgument when sigma is empty, unsorted, out of [0, 2),
    /// or has points closer than kFiberSeparation (cyclically).
    void validate() const;
};

struct FourLinesConfig {
    int p = 3;

    void validate() const;
};

enum class FiberClass { P1, P2, P3, P4 };

std::string to_string(FiberClass c);

struct Classification {
    FiberClass tag;
    std::vector<double> witness;  // eta values: the fiber for P1/P2, the ordered 4-tuple for P4
};

/// Complete homogeneous symmetric polynomial H_k(vals).
cplx homog_sym(int k, const std::vector<cplx>& vals);

/// (a - b)(b - c)(c - a).
cplx vandermonde3_det(cplx a, cplx b, cplx c);

/// Coefficients of x^p + tau2 x^2 + tau1 x + tau0 vanishing at a, b, c.
/// Returned as {tau0, tau1, tau2}. Throws InvalidArgument when
/// |(a - b)(b - c)(c - a)| <= 1e-12 or p is outside [3, kMaxLinesExponent].
std::array<cplx, 3> solve_tau(cplx a, cplx b, cplx c, int p);

/// {delta0, delta1} with x^2 + delta1 x + delta0 vanishing at chi0, chi1.
std::array<cplx, 2> solve_delta(cplx chi0, cplx chi1);

/// {e0, e1, e2} with x^3 + e2 x^2 + e1 x + e0 vanishing at a, b, c.
std::array<cplx, 3> solve_e(cplx a, cplx b, cplx c);

/// (a^3 (b - c) + b^3 (c - a) + c^3 (a - b))^2.
cplx rho(cplx a, cplx b, cplx c);

/// |a0 + a1|, strictly below 2 for distinct points.
double delta_bound(const UnitPoint& chi0, const UnitPoint& chi1);

Classification classify(const Fiber& fiber, const FourLinesConfig& cfg);

/// Groups points by exact xi (ascending), reduces eta into [0, 2) and drops
/// duplicates within kFiberSeparation.
std::vector<Fiber> periodize(const std::vector<Point>& points);

/// Sampled monic relation psi^d + sum_{j<d} coeffs[j] psi^j = 0 on a grid.
struct Relation {
    std::vector<std::vector<cplx>> coeffs;  // coeffs[j][i] at grid point i, j = 0..d-1

    int degree() const { return static_cast<int>(coeffs.size()); }
    /// Max over the grid of |psi^d + sum c_j psi^j| / max(1, sum of term moduli).
    double residual(const std::vector<cplx>& psi) const;
};

/// Multiplies the relation by (psi + f0hat): degree d -> d + 1. Throws
/// InvalidArgument if the input residual exceeds 1e-10 and NumericError if
/// the lifted residual exceeds 1e-9.
Relation lift_relation(const std::vector<cplx>& psi, const Relation& rel, const std::vector<cplx>& f0hat);

}  // namespace huplab
