#pragma once

#include <complex>
#include <numbers>
#include <random>

namespace testing {

inline constexpr double kPi = std::numbers::pi;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240607);
    return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline std::complex<double> unit_random() { return std::polar(1.0, uniform(-kPi, kPi)); }

inline std::complex<double> complex_random(double r = 2.0) { return {uniform(-r, r), uniform(-r, r)}; }

}  // namespace testing
