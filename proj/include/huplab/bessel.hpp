#pragma once

#include <optional>
#include <variant>
#include <vector>

namespace huplab {

/// Bessel order restricted to integers and half-integers: nu = twice_nu / 2.
class Order {
public:
    constexpr explicit Order(unsigned twice_nu) : twice_nu_(twice_nu) {}

    static constexpr Order integer(unsigned k) { return Order(2 * k); }
    static constexpr Order half_odd(unsigned k) { return Order(2 * k + 1); }  // k + 1/2

    constexpr unsigned twice_nu() const { return twice_nu_; }
    constexpr double value() const { return 0.5 * static_cast<double>(twice_nu_); }
    constexpr bool is_integer() const { return twice_nu_ % 2 == 0; }

    friend constexpr bool operator==(Order, Order) = default;

private:
    unsigned twice_nu_;
};

/// J_nu(x) for x >= 0. Power series for x <= max(12, nu), normalized
/// downward recurrence above that for integer orders, upward spherical
/// recurrence for half-integer orders. Throws InvalidArgument for x < 0.
double bessel_j(Order nu, double x);

/// n-th positive zero j_{nu,n} (n >= 1), bisected to full double precision.
double bessel_zero(Order nu, int n);

/// Integer orders 0, 1, 2, ...
struct AllIntegers {};
/// Orders (dimension + 2k - 2)/2, k = 0, 1, 2, ... (sphere S^{dimension-1}).
struct EvenHalfIntegers {
    int dimension;
};
using OrderFamily = std::variant<AllIntegers, EvenHalfIntegers>;

struct NonzeroReport {
    bool all_nonzero = true;
    std::vector<Order> checked;      // orders evaluated numerically
    std::optional<Order> vanishing;  // first order with |J_nu(x)| <= threshold
};

/// Threshold below which |J_nu(x)| counts as a zero.
inline constexpr double kBesselZeroThreshold = 1e-9;

/// Checks J_nu(x) != 0 for every order of the family up to ceil(x). Orders
/// nu >= x are nonzero without evaluation because j_{nu,1} > nu.
NonzeroReport check_orders_nonzero(double x, const OrderFamily& family);

bool all_orders_nonzero(double x, const OrderFamily& family);

}  // namespace huplab
