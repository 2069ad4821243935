#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hypell/series.hpp"

namespace hypell {

/// Parameters of F_a(z) = F(1/2 - a, 1/2 + a; 1/2; z). a = 0 is the classical
/// 1/sqrt(1-z); a = 1/N for a positive integer N is the case of interest.
struct HypergeomParams {
    double a = 0.0;
    int series_order = 32;
    double tol = 1e-15;

    explicit HypergeomParams(double a_in = 0.0, int series_order_in = 32, double tol_in = 1e-15)
        : a(a_in), series_order(series_order_in), tol(tol_in) {
        if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("a must lie in [0,1]");
        if (!(tol > 0.0)) throw std::domain_error("tol must be positive");
    }
};

/// Gauss series for F_a(z), |z| < 1. Pochhammer ratios are accumulated
/// multiplicatively; summation stops once three consecutive terms fall below
/// tol * |partial sum|.
inline Complex f_a_value(const HypergeomParams& p, Complex z) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("f_a_value: z outside the unit disk");
    Complex term = 1.0;
    Complex sum = 1.0;
    int small_streak = 0;
    constexpr int kMaxTerms = 10000;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (0.5 - p.a + k) * (0.5 + p.a + k) / ((0.5 + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= p.tol * std::abs(sum)) {
            if (++small_streak == 3) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw std::runtime_error("f_a_value: series did not reach tolerance within 10000 terms");
}

/// Maclaurin coefficients of F_a in z: coefficient k is
/// (1/2-a)_k (1/2+a)_k / ((1/2)_k k!).
inline TruncatedSeries f_a_series(const HypergeomParams& p, int order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    std::vector<Complex> v(static_cast<std::size_t>(order) + 1);
    double coeff = 1.0;
    v[0] = 1.0;
    for (int k = 1; k <= order; ++k) {
        coeff *= (0.5 - p.a + (k - 1)) * (0.5 + p.a + (k - 1)) / ((0.5 + (k - 1)) * k);
        v[static_cast<std::size_t>(k)] = coeff;
    }
    return TruncatedSeries(std::move(v));
}

/// |F_a(sin^2 z) - cos(2az)/cos(z)|, the identity every later construction
/// leans on. Requires |sin^2 z| < 1 and cos z away from its zeros.
inline double identity_residual(const HypergeomParams& p, Complex z) {
    const Complex cz = std::cos(z);
    if (std::abs(cz) < 1e-12) throw std::domain_error("identity_residual: cos z vanishes");
    const Complex s = std::sin(z);
    const Complex lhs = f_a_value(p, s * s);
    const Complex rhs = std::cos(2.0 * p.a * z) / cz;
    return std::abs(lhs - rhs);
}

}  // namespace hypell
