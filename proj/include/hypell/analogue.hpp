#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hypell/hypergeom.hpp"
#include "hypell/rational.hpp"
#include "hypell/series.hpp"

namespace hypell {

/// Modulus bundle (a, kappa, lambda, Lambda) with kappa^2 + lambda^2 = 1 and
/// Lambda = 1 - 2 lambda^2 = 2 kappa^2 - 1. a is kept exact: the parity of
/// 1/a decides which family of identities applies, and 1/6 or 1/10 have no
/// exact binary representation.
struct ModulusParams {
    Rational a;
    int N = 0;  // a == 1/N when N > 0; 0 for the classical a = 0 (or non-unit a)
    double kappa = 0.0;
    double lambda = 0.0;
    double Lambda = 0.0;

    ModulusParams(Rational a_in, double kappa_in) : a(std::move(a_in)), kappa(kappa_in) {
        if (!(kappa > 0.0 && kappa < 1.0)) throw std::domain_error("kappa must lie in (0,1)");
        if (a.signum() < 0 || Rational(1) < a) throw std::domain_error("a must lie in [0,1]");
        lambda = std::sqrt(1.0 - kappa * kappa);
        Lambda = 2.0 * kappa * kappa - 1.0;
        if (!a.is_zero() && a.num() == BigInt(1)) N = static_cast<int>(a.den().to_long_long());
    }

    bool classical() const { return a.is_zero(); }
    bool even_case() const { return N > 0 && N % 2 == 0; }  // 1/a = 2n
    bool odd_case() const { return N > 0 && N % 2 == 1; }   // 1/a = 2m+1
    double a_value() const { return a.to_double(); }
};

enum class AnalogueFn { phi, psi, s, c, d, partial, nabla, delta };

inline const char* to_string(AnalogueFn f) {
    switch (f) {
        case AnalogueFn::phi: return "phi";
        case AnalogueFn::psi: return "psi";
        case AnalogueFn::s: return "s";
        case AnalogueFn::c: return "c";
        case AnalogueFn::d: return "d";
        case AnalogueFn::partial: return "partial";
        case AnalogueFn::nabla: return "nabla";
        case AnalogueFn::delta: return "delta";
    }
    throw std::invalid_argument("unknown analogue function");
}

inline AnalogueFn analogue_fn_from_string(const std::string& name) {
    for (AnalogueFn f : {AnalogueFn::phi, AnalogueFn::psi, AnalogueFn::s, AnalogueFn::c,
                         AnalogueFn::d, AnalogueFn::partial, AnalogueFn::nabla, AnalogueFn::delta})
        if (name == to_string(f)) return f;
    throw std::invalid_argument("unknown function '" + name +
                                "' (expected phi|psi|s|c|d|partial|nabla|delta)");
}

/// Radius inside which the truncated series is trusted for evaluation: a
/// quarter of the radius where the last retained coefficient contributes
/// ~1e-14, capped at 0.5. Evaluation beyond it is refused rather than
/// extrapolated.
inline double trusted_radius_of(const TruncatedSeries& x) {
    constexpr double kTailTol = 1e-14;
    int j = x.order();
    while (j > 0 && std::abs(x[j]) == 0.0) --j;
    if (j == 0) return 0.5;
    const double r = 0.25 * std::pow(kTailTol / std::abs(x[j]), 1.0 / j);
    return std::min(r, 0.5);
}

/// The full analogue family for one (a, kappa): the local inverse phi of
/// u = integral of F_a(kappa^2 sin^2 theta), the angle psi with
/// sin psi = kappa sin phi, and s = sin phi, c = cos phi, d = cos psi,
/// partial = cos 2a psi, nabla = partial^2, delta = d/partial, all as series
/// in u. Immutable after build; evaluation refuses |u| beyond the trusted
/// radius.
class AnalogueSet {
public:
    static AnalogueSet build(const ModulusParams& p, int order) {
        if (order < 4) throw std::invalid_argument("order must be at least 4");
        const double k2 = p.kappa * p.kappa;

        const HypergeomParams hp(p.a_value());
        const TruncatedSeries sin_theta = sin_series(order - 1);
        const TruncatedSeries integrand =
            compose(f_a_series(hp, order - 1), Complex(k2) * (sin_theta * sin_theta));
        const TruncatedSeries u_of_phi = antiderivative(integrand);  // order `order`, linear coeff 1

        TruncatedSeries phi = revert(u_of_phi);
        TruncatedSeries s = compose(sin_series(order), phi);
        TruncatedSeries c = compose(cos_series(order), phi);
        TruncatedSeries psi = compose(arcsin_series(order), Complex(p.kappa) * s);
        TruncatedSeries d = compose(cos_series(order), psi);
        TruncatedSeries partial = compose(cos_series(order), Complex(2.0 * p.a_value()) * psi);
        TruncatedSeries nabla = partial * partial;
        TruncatedSeries delta = d / partial;

        return AnalogueSet(p, {std::move(phi), std::move(psi), std::move(s), std::move(c),
                               std::move(d), std::move(partial), std::move(nabla), std::move(delta)});
    }

    const ModulusParams& params() const { return params_; }
    int order() const { return fns_[0].order(); }

    const TruncatedSeries& series(AnalogueFn f) const {
        return fns_[static_cast<std::size_t>(f)];
    }

    const TruncatedSeries& phi() const { return series(AnalogueFn::phi); }
    const TruncatedSeries& psi() const { return series(AnalogueFn::psi); }
    const TruncatedSeries& s() const { return series(AnalogueFn::s); }
    const TruncatedSeries& c() const { return series(AnalogueFn::c); }
    const TruncatedSeries& d() const { return series(AnalogueFn::d); }
    const TruncatedSeries& partial() const { return series(AnalogueFn::partial); }
    const TruncatedSeries& nabla() const { return series(AnalogueFn::nabla); }
    const TruncatedSeries& delta() const { return series(AnalogueFn::delta); }

    double trusted_radius(AnalogueFn f) const { return radius_[static_cast<std::size_t>(f)]; }

    /// Smallest trusted radius across the family.
    double trusted_radius() const {
        double r = radius_[0];
        for (double v : radius_) r = std::min(r, v);
        return r;
    }

    Complex eval(AnalogueFn f, Complex u) const {
        if (std::abs(u) > trusted_radius(f))
            throw std::domain_error(std::string("eval: |u| exceeds the trusted radius of ") +
                                    to_string(f));
        return evaluate(series(f), u);
    }

private:
    AnalogueSet(const ModulusParams& p, std::array<TruncatedSeries, 8> fns)
        : params_(p), fns_(std::move(fns)) {
        for (std::size_t i = 0; i < fns_.size(); ++i) radius_[i] = trusted_radius_of(fns_[i]);
    }

    ModulusParams params_;
    std::array<TruncatedSeries, 8> fns_;  // indexed by AnalogueFn
    std::array<double, 8> radius_{};
};

namespace detail {

struct GaussLegendre64 {
    std::array<double, 64> node{};
    std::array<double, 64> weight{};

    GaussLegendre64() {
        constexpr int n = 64;
        for (int i = 1; i <= n / 2; ++i) {
            double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p1 = 1.0, p2 = 0.0;
                for (int j = 1; j <= n; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
                }
                pp = n * (z * p1 - p2) / (z * z - 1.0);
                const double dz = p1 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-15) break;
            }
            node[static_cast<std::size_t>(i - 1)] = -z;
            node[static_cast<std::size_t>(n - i)] = z;
            weight[static_cast<std::size_t>(i - 1)] = 2.0 / ((1.0 - z * z) * pp * pp);
            weight[static_cast<std::size_t>(n - i)] = weight[static_cast<std::size_t>(i - 1)];
        }
    }
};

inline const GaussLegendre64& gl64() {
    static const GaussLegendre64 table;
    return table;
}

template <typename F>
double gauss_legendre(F&& f, double lo, double hi) {
    const auto& gl = gl64();
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (std::size_t i = 0; i < gl.node.size(); ++i) acc += gl.weight[i] * f(mid + half * gl.node[i]);
    return acc * half;
}

}  // namespace detail

/// Inverts u = integral_0^phi F_a(kappa^2 sin^2 theta) dtheta by Newton on the
/// quadrature itself (64-node Gauss-Legendre, with one interval-halving
/// refinement as error estimate). Fully independent of the series route.
inline double phi_oracle(const ModulusParams& p, double u) {
    if (u == 0.0) return 0.0;
    const double k2 = p.kappa * p.kappa;
    const HypergeomParams hp(p.a_value());
    const auto integrand = [&](double theta) {
        const double st = std::sin(theta);
        return f_a_value(hp, Complex(k2 * st * st)).real();
    };
    const auto integral = [&](double phi_end) {
        const double whole = detail::gauss_legendre(integrand, 0.0, phi_end);
        const double halves = detail::gauss_legendre(integrand, 0.0, 0.5 * phi_end) +
                              detail::gauss_legendre(integrand, 0.5 * phi_end, phi_end);
        if (std::abs(whole - halves) > 1e-10 * std::max(1.0, std::abs(halves)))
            throw std::runtime_error("phi_oracle: quadrature refinement disagrees");
        return halves;
    };

    const double bound = std::numbers::pi / 2.0 - 1e-9;
    double phi = u;  // F_a(0) = 1, so phi ~ u near 0
    for (int it = 0; it < 50; ++it) {
        if (!(std::abs(phi) < bound))
            throw std::domain_error("phi_oracle: phi left the principal interval");
        const double g = integral(phi) - u;
        const double step = g / integrand(phi);
        phi -= step;
        if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(phi))) {
            if (std::abs(integral(phi) - u) > 1e-12)
                throw std::runtime_error("phi_oracle: Newton stalled above tolerance");
            return phi;
        }
    }
    throw std::runtime_error("phi_oracle: Newton failed to converge in 50 steps");
}

}  // namespace hypell
