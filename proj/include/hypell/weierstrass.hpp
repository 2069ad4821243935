#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hypell/analogue.hpp"
#include "hypell/series.hpp"

namespace hypell {

struct WeierstrassInvariants {
    double g2 = 0.0;
    double g3 = 0.0;

    double modular_discriminant() const { return g2 * g2 * g2 - 27.0 * g3 * g3; }
};

/// Taylor part of the Laurent expansion: wp(z) - 1/z^2 = sum_{k>=2} c_k z^{2k-2}
/// with c_2 = g2/20, c_3 = g3/28 and the standard quadratic recursion
/// c_k = 3/((2k+1)(k-3)) sum_{i=2}^{k-2} c_i c_{k-i}. `order` is the largest
/// index k kept, so the returned series runs through z^{2*order-2}.
inline TruncatedSeries wp_series(const WeierstrassInvariants& inv, int order) {
    if (order < 2) throw std::invalid_argument("wp_series: order must be >= 2");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[2] = inv.g2 / 20.0;
    if (order >= 3) c[3] = inv.g3 / 28.0;
    for (int k = 4; k <= order; ++k) {
        double acc = 0.0;
        for (int i = 2; i <= k - 2; ++i) acc += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
        c[static_cast<std::size_t>(k)] = 3.0 * acc / ((2.0 * k + 1.0) * (k - 3.0));
    }
    std::vector<Complex> v(static_cast<std::size_t>(2 * order - 1), Complex(0.0));
    for (int k = 2; k <= order; ++k) v[static_cast<std::size_t>(2 * k - 2)] = c[static_cast<std::size_t>(k)];
    return TruncatedSeries(std::move(v));
}

/// Local evaluator for wp and wp' near 0: pole part explicit, tail truncated.
/// Evaluation is confined to the annulus 0 < |z| <= trusted radius of the
/// tail; there is no duplication-formula extension.
class WeierstrassP {
public:
    explicit WeierstrassP(WeierstrassInvariants inv, int even_terms = 40)
        : inv_(inv),
          tail_(wp_series(inv, even_terms + 1)),
          tail_prime_(derivative(tail_)),
          radius_(trusted_radius_of(tail_)) {}

    const WeierstrassInvariants& invariants() const { return inv_; }
    const TruncatedSeries& tail() const { return tail_; }
    double trusted_radius() const { return radius_; }

    Complex eval(Complex z) const {
        check(z);
        return 1.0 / (z * z) + evaluate(tail_, z);
    }

    Complex eval_prime(Complex z) const {
        check(z);
        return -2.0 / (z * z * z) + evaluate(tail_prime_, z);
    }

private:
    void check(Complex z) const {
        if (z == Complex(0.0)) throw std::domain_error("WeierstrassP: pole at z = 0");
        if (std::abs(z) > radius_)
            throw std::domain_error("WeierstrassP: |z| exceeds the trusted radius");
    }

    WeierstrassInvariants inv_;
    TruncatedSeries tail_;
    TruncatedSeries tail_prime_;
    double radius_;
};

inline Complex wp_eval(const WeierstrassInvariants& inv, Complex z) {
    return WeierstrassP(inv).eval(z);
}

inline Complex wp_prime_eval(const WeierstrassInvariants& inv, Complex z) {
    return WeierstrassP(inv).eval_prime(z);
}

namespace detail {
inline void check_kappa(double kappa) {
    if (!(kappa > 0.0 && kappa < 1.0)) throw std::domain_error("kappa must lie in (0,1)");
}
}  // namespace detail

/// Invariants of the signature-4 representation d = 1 - (kappa^2/2)/(wp + 1/3).
inline WeierstrassInvariants sig4_invariants(double kappa) {
    detail::check_kappa(kappa);
    const double k2 = kappa * kappa;
    const WeierstrassInvariants inv{4.0 / 3.0 - k2, 8.0 / 27.0 - k2 / 3.0};
    // analytically g2^3 - 27 g3^2 = kappa^4 lambda^2 > 0 on (0,1)
    if (!(inv.modular_discriminant() > 0.0))
        throw std::logic_error("sig4_invariants: degenerate discriminant");
    return inv;
}

/// Invariants of the signature-3 representation dn_3 = 1 - (4 kappa^2/9)/(wp + 1/3).
inline WeierstrassInvariants sig3_invariants(double kappa) {
    detail::check_kappa(kappa);
    const double k2 = kappa * kappa;
    const WeierstrassInvariants inv{4.0 * (9.0 - 8.0 * k2) / 27.0,
                                    8.0 * (8.0 * k2 * k2 - 36.0 * k2 + 27.0) / 729.0};
    if (!(std::abs(inv.modular_discriminant()) > 0.0))
        throw std::logic_error("sig3_invariants: degenerate discriminant");
    return inv;
}

/// Closed form d = 1 - (kappa^2/2)/(wp + 1/3). The wp pole makes the fraction
/// vanish as u -> 0, so the removable value at 0 is exactly 1.
inline Complex sig4_d_closed(double kappa, Complex u) {
    detail::check_kappa(kappa);
    if (u == Complex(0.0)) return 1.0;
    const WeierstrassP wp(sig4_invariants(kappa));
    return 1.0 - 0.5 * kappa * kappa / (wp.eval(u) + 1.0 / 3.0);
}

/// Closed form c^2 = (wp')^2 / (4 (wp + 1/3)^3); removable value 1 at u = 0.
inline Complex sig4_c2_closed(double kappa, Complex u) {
    detail::check_kappa(kappa);
    if (u == Complex(0.0)) return 1.0;
    const WeierstrassP wp(sig4_invariants(kappa));
    const Complex p = wp.eval(u) + 1.0 / 3.0;
    const Complex pp = wp.eval_prime(u);
    return 0.25 * pp * pp / (p * p * p);
}

/// Closed form dn_3 = 1 - (4 kappa^2/9)/(wp + 1/3); removable value 1 at u = 0.
inline Complex sig3_dn3_closed(double kappa, Complex u) {
    detail::check_kappa(kappa);
    if (u == Complex(0.0)) return 1.0;
    const WeierstrassP wp(sig3_invariants(kappa));
    return 1.0 - (4.0 / 9.0) * kappa * kappa / (wp.eval(u) + 1.0 / 3.0);
}

}  // namespace hypell
