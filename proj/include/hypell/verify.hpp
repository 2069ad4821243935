#pragma once

#include <algorithm>
#include <cmath>
#include <ctime>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "hypell/analogue.hpp"
#include "hypell/chebyshev.hpp"
#include "hypell/weierstrass.hpp"

namespace hypell {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckMode { series, pointwise, exact };

inline const char* to_string(CheckMode m) {
    switch (m) {
        case CheckMode::series: return "series";
        case CheckMode::pointwise: return "pointwise";
        case CheckMode::exact: return "exact";
    }
    return "?";
}

/// One identity rendered as a residual. Series-mode residuals are normalized
/// by the largest coefficient magnitude among the equation's terms;
/// exact-mode checks demand residual exactly 0.
struct TheoremCheck {
    std::string id;
    std::string a;  // "1/4", or "-" for parameter-free checks
    double kappa = 0.0;
    CheckMode mode = CheckMode::series;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Tolerances {
    double series = 1e-10;
    double pointwise = 1e-9;
};

struct SuiteConfig {
    std::vector<Rational> a_grid;
    std::vector<double> kappa_grid;
    int order = 32;
    Tolerances tol;

    static SuiteConfig defaults() {
        SuiteConfig cfg;
        cfg.a_grid = {Rational(1, 4), Rational(1, 6), Rational(1, 8), Rational(1, 10),
                      Rational(1, 3), Rational(1, 5), Rational(1, 7)};
        cfg.kappa_grid = {0.3, 0.6, 0.8, 0.95};
        cfg.order = 32;
        return cfg;
    }
};

struct VerificationReport {
    std::string version;
    SuiteConfig config;
    std::vector<TheoremCheck> checks;  // sorted by (id, a, kappa)
    std::vector<std::string> notes;
    std::string timestamp;  // kept out of the machine formats; see report.hpp

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Coefficientwise residual of lhs = rhs through the shared order (optionally
/// capped), divided by max(1, largest coefficient magnitude on either side).
inline double series_residual(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                              int through = -1) {
    int m = std::min(lhs.order(), rhs.order());
    if (through >= 0) m = std::min(m, through);
    double norm = 1.0;
    double diff = 0.0;
    for (int k = 0; k <= m; ++k) {
        norm = std::max({norm, std::abs(lhs[k]), std::abs(rhs[k])});
        diff = std::max(diff, std::abs(lhs[k] - rhs[k]));
    }
    return diff / norm;
}

namespace detail {

inline TheoremCheck series_check(std::string id, const ModulusParams& p, double residual, double tol) {
    return TheoremCheck{std::move(id), p.a.str(), p.kappa, CheckMode::series, residual, tol,
                        residual <= tol};
}

inline TheoremCheck pointwise_check(std::string id, const std::string& a, double kappa,
                                    double residual, double tol) {
    return TheoremCheck{std::move(id), a, kappa, CheckMode::pointwise, residual, tol,
                        residual <= tol};
}

inline TheoremCheck exact_check(std::string id, double residual) {
    return TheoremCheck{std::move(id), "-", 0.0, CheckMode::exact, residual, 0.0, residual == 0.0};
}

/// Deterministic sample points filling a disk of the given radius (never 0).
inline std::vector<Complex> sample_disk(double radius, int count) {
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(count));
    constexpr double golden = 0.6180339887498949;
    for (int j = 1; j <= count; ++j) {
        const double r = radius * j / (count + 1.0);
        const double ang = 2.0 * std::numbers::pi * std::fmod(golden * j, 1.0);
        pts.push_back(std::polar(r, ang));
    }
    return pts;
}

/// Same spiral confined to the outer half of an annulus; used where absolute
/// residuals would be swamped by cancellation near a pole.
inline std::vector<Complex> sample_outer_annulus(double radius, int count) {
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(count));
    constexpr double golden = 0.6180339887498949;
    for (int j = 1; j <= count; ++j) {
        const double r = radius * (0.5 + 0.5 * j / (count + 1.0));
        const double ang = 2.0 * std::numbers::pi * std::fmod(golden * j, 1.0);
        pts.push_back(std::polar(r, ang));
    }
    return pts;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Local structure: the derivative identity, quadratic relations, and the
// definitional wiring of nabla and delta.
// ---------------------------------------------------------------------------

inline TheoremCheck check_thm1(const AnalogueSet& set, double tol) {
    const double r = series_residual(derivative(set.phi()) * set.partial(), set.d());
    return detail::series_check("thm1_phi_prime", set.params(), r, tol);
}

inline TheoremCheck check_psi_prime(const AnalogueSet& set, double tol) {
    const double r = series_residual(derivative(set.psi()) * set.partial(),
                                     Complex(set.params().kappa) * set.c());
    return detail::series_check("thm2_psi_prime", set.params(), r, tol);
}

inline std::vector<TheoremCheck> check_local_relations(const AnalogueSet& set, double tol) {
    const int m = set.order();
    const TruncatedSeries one = TruncatedSeries::constant(1.0, m);
    const double k2 = set.params().kappa * set.params().kappa;
    std::vector<TheoremCheck> out;
    out.push_back(detail::series_check("quad_c2_s2", set.params(),
                                       series_residual(set.c() * set.c() + set.s() * set.s(), one), tol));
    out.push_back(detail::series_check(
        "quad_d2_k2s2", set.params(),
        series_residual(set.d() * set.d() + Complex(k2) * (set.s() * set.s()), one), tol));
    out.push_back(detail::series_check(
        "nabla_def", set.params(), series_residual(set.nabla(), set.partial() * set.partial()), tol));
    out.push_back(detail::series_check(
        "delta_def", set.params(), series_residual(set.delta() * set.partial(), set.d()), tol));
    const TruncatedSeries ratio = set.s() / set.c();
    out.push_back(detail::series_check(
        "quotient_sc", set.params(),
        series_residual(one + ratio * ratio, reciprocal(set.c() * set.c())), tol));
    return out;
}

// ---------------------------------------------------------------------------
// First-order differential equations for d and partial (any a).
// ---------------------------------------------------------------------------

inline std::vector<TheoremCheck> check_thm2(const AnalogueSet& set, double tol) {
    const ModulusParams& p = set.params();
    const double lam2 = 1.0 - p.kappa * p.kappa;
    const int through = set.order() - 2;
    const TruncatedSeries d2 = set.d() * set.d();
    const TruncatedSeries part2 = set.partial() * set.partial();
    const TruncatedSeries dp = derivative(set.d());
    const TruncatedSeries pp = derivative(set.partial());

    const double r1 = series_residual(part2 * (dp * dp),
                                      (1.0 - d2) * (d2 - Complex(lam2)), through);
    const double a2x4 = 4.0 * p.a_value() * p.a_value();
    const double r2 = series_residual(part2 * (pp * pp),
                                      Complex(a2x4) * ((1.0 - part2) * (d2 - Complex(lam2))), through);
    return {detail::series_check("thm2_d_ode", p, r1, tol),
            detail::series_check("thm2_partial_ode", p, r2, tol)};
}

// ---------------------------------------------------------------------------
// Even case 1/a = 2n.
// ---------------------------------------------------------------------------

inline TheoremCheck check_thm3_even(const AnalogueSet& set, double tol) {
    const ModulusParams& p = set.params();
    if (!p.even_case()) throw std::invalid_argument("check_thm3_even: 1/a must be even");
    const int n = p.N / 2;
    const double r = series_residual(set.d(), evaluate(cheb_t(n), set.partial()));
    return detail::series_check("thm3_compose", p, r, tol);
}

inline std::vector<TheoremCheck> check_thm4_thm5_even(const AnalogueSet& set, double tol) {
    const ModulusParams& p = set.params();
    if (!p.even_case()) throw std::invalid_argument("check_thm4_thm5_even: 1/a must be even");
    const int n = p.N / 2;
    const double lam2 = 1.0 - p.kappa * p.kappa;
    const int through = set.order() - 2;

    const TruncatedSeries part2 = set.partial() * set.partial();
    const TruncatedSeries pp = derivative(set.partial());
    const TruncatedSeries tn = evaluate(cheb_t(n), set.partial());
    const double r4 = series_residual(
        part2 * (pp * pp),
        Complex(1.0 / (n * n)) * ((1.0 - part2) * (tn * tn - Complex(lam2))), through);

    const TruncatedSeries np = derivative(set.nabla());
    const TruncatedSeries sn = evaluate(s_n_poly(n), set.nabla());
    const double r5 = series_residual(
        np * np, Complex(4.0 / (n * n)) * ((1.0 - set.nabla()) * (sn - Complex(lam2))), through);

    return {detail::series_check("thm4_partial_ode", p, r4, tol),
            detail::series_check("thm5_nabla_ode", p, r5, tol)};
}

/// 1/a = 2n with n = 2m+1 odd: delta collapses to V_m(2 nabla - 1).
inline TheoremCheck check_remark_delta_vm(const AnalogueSet& set, double tol) {
    const ModulusParams& p = set.params();
    if (!p.even_case() || (p.N / 2) % 2 == 0)
        throw std::invalid_argument("check_remark_delta_vm: needs 1/a = 2n with n odd");
    const int m = (p.N / 2 - 1) / 2;
    const TruncatedSeries arg = Complex(2.0) * set.nabla() - 1.0;
    const double r = series_residual(set.delta(), evaluate(cheb_v(m), arg));
    return detail::series_check("remark_delta_vm", p, r, tol);
}

// ---------------------------------------------------------------------------
// Odd case 1/a = n = 2m+1.
// ---------------------------------------------------------------------------

inline std::vector<TheoremCheck> check_thm7_8_9_odd(const AnalogueSet& set, double tol) {
    const ModulusParams& p = set.params();
    if (!p.odd_case()) throw std::invalid_argument("check_thm7_8_9_odd: 1/a must be odd");
    const int n = p.N;
    const int m = (n - 1) / 2;
    const int through = set.order() - 2;

    const TruncatedSeries tn = evaluate(cheb_t(n), set.partial());
    const double r7 = series_residual(Complex(2.0) * (set.d() * set.d()) - 1.0, tn);

    const TruncatedSeries part2 = set.partial() * set.partial();
    const TruncatedSeries pp = derivative(set.partial());
    const double r8 = series_residual(
        part2 * (pp * pp),
        Complex(2.0 / (n * n)) * ((1.0 - part2) * (tn + Complex(p.Lambda))), through);

    const TruncatedSeries np = derivative(set.nabla());
    const TruncatedSeries nb1 = set.nabla() - 1.0;
    const TruncatedSeries lhs_inner =
        Complex(n * n / 8.0) * (np * np) + Complex(p.Lambda) * nb1;
    const TruncatedSeries vm = evaluate(cheb_v(m), Complex(2.0) * set.nabla() - 1.0);
    const double r9 = series_residual(lhs_inner * lhs_inner,
                                      set.nabla() * (nb1 * nb1) * (vm * vm), through);

    return {detail::series_check("thm7_compose", p, r7, tol),
            detail::series_check("thm8_partial_ode", p, r8, tol),
            detail::series_check("thm9_nabla_ode", p, r9, tol)};
}

// ---------------------------------------------------------------------------
// Squares D, C, S: the nabla-weighted ODEs and the linear relations.
// ---------------------------------------------------------------------------

inline std::vector<TheoremCheck> check_square_odes(const AnalogueSet& set, double tol) {
    const ModulusParams& p = set.params();
    const double k2 = p.kappa * p.kappa;
    const double lam2 = 1.0 - k2;
    const int through = set.order() - 2;
    const TruncatedSeries one = TruncatedSeries::constant(1.0, set.order());

    const TruncatedSeries D = set.d() * set.d();
    const TruncatedSeries C = set.c() * set.c();
    const TruncatedSeries S = set.s() * set.s();
    const TruncatedSeries Dp = derivative(D);
    const TruncatedSeries Cp = derivative(C);
    const TruncatedSeries Sp = derivative(S);

    const double rd = series_residual(
        set.nabla() * (Dp * Dp), Complex(4.0) * (D * (1.0 - D) * (D - Complex(lam2))), through);
    const double rc = series_residual(
        set.nabla() * (Cp * Cp),
        Complex(4.0) * (C * (1.0 - C) * (Complex(lam2) + Complex(k2) * C)), through);
    const double rs = series_residual(
        set.nabla() * (Sp * Sp),
        Complex(4.0) * (S * (1.0 - S) * (1.0 - Complex(k2) * S)), through);
    const double rcs = series_residual(C + S, one);
    const double rds = series_residual(D + Complex(k2) * S, one);

    return {detail::series_check("sqD_ode", p, rd, tol),
            detail::series_check("sqC_ode", p, rc, tol),
            detail::series_check("sqS_ode", p, rs, tol),
            detail::series_check("lin_C_plus_S", p, rcs, tol),
            detail::series_check("lin_D_plus_k2S", p, rds, tol)};
}

// ---------------------------------------------------------------------------
// Exact polynomial facts (parameter-free).
// ---------------------------------------------------------------------------

inline TheoremCheck check_zero_free_obstruction(int n) {
    const Rational t0sq = cheb_t(n)(Rational(0)) * cheb_t(n)(Rational(0));
    const Rational expect = (n % 2 == 1) ? Rational(0) : Rational(1);
    return detail::exact_check("exact_tn0_sq_n" + std::to_string(n),
                               t0sq == expect ? 0.0 : 1.0);
}

inline TheoremCheck check_polar_arithmetic() {
    // all positive-integer solutions of m (n - 1) = 2 with n up to 10^6
    std::vector<std::pair<long, long>> found;
    for (long n = 2; n <= 1000000; ++n) {
        if (2 % (n - 1) == 0) found.emplace_back(n, 2 / (n - 1));
    }
    const std::vector<std::pair<long, long>> expect = {{2, 2}, {3, 1}};
    return detail::exact_check("exact_polar_count", found == expect ? 0.0 : 1.0);
}

inline TheoremCheck check_simple_zero_values(int n, const Rational& lambda2) {
    if (n < 1) throw std::invalid_argument("check_simple_zero_values: n must be >= 1");
    // substitute f = 0 into (4/n^2)(1 - f)(S_n(f) - lambda^2)
    const Rational value = Rational(4, static_cast<long long>(n) * n) *
                           (s_n_poly(n)(Rational(0)) - lambda2);
    const Rational expect = (n % 2 == 0)
                                ? Rational(4, static_cast<long long>(n) * n) * (Rational(1) - lambda2)
                                : -(Rational(4, static_cast<long long>(n) * n) * lambda2);
    return detail::exact_check("exact_simple_zero_n" + std::to_string(n),
                               value == expect ? 0.0 : 1.0);
}

inline std::vector<TheoremCheck> exact_polynomial_checks() {
    std::vector<TheoremCheck> out;
    const RationalPoly x2({Rational(0), Rational(0), Rational(1)});

    for (int n = 1; n <= 12; ++n) {
        const bool ok = cheb_t(n) * cheb_t(n) == s_n_poly(n).compose(x2);
        out.push_back(detail::exact_check("exact_sn_identity_n" + std::to_string(n), ok ? 0.0 : 1.0));
    }
    for (int m = 0; m <= 8; ++m)
        out.push_back(detail::exact_check("exact_odd_fact_m" + std::to_string(m),
                                          odd_factorization_check(m) ? 0.0 : 1.0));
    for (int m = 0; m <= 6; ++m) {
        const RationalPoly q = q_poly(m);
        const bool ok = q.coeff(0).is_zero() &&
                        q.coeff(1) == Rational((2LL * m + 1) * (2LL * m + 1));
        out.push_back(detail::exact_check("exact_q_prime0_m" + std::to_string(m), ok ? 0.0 : 1.0));
    }
    for (int n = 0; n <= 12; ++n) out.push_back(check_zero_free_obstruction(n));
    out.push_back(check_polar_arithmetic());
    for (int n = 2; n <= 9; ++n) out.push_back(check_simple_zero_values(n, Rational(1, 4)));

    // cubic nabla (4 nabla - 3)^2 - lambda^2: discriminant 2^8 3^3 lambda^2 (1 - lambda^2),
    // and value kappa^2 != 0 at nabla = 1
    {
        bool disc_ok = true;
        bool at_one_ok = true;
        for (int k = 1; k <= 10; ++k) {
            const Rational lam2(k, 11);
            const RationalPoly cubic({-lam2, Rational(9), Rational(-24), Rational(16)});
            disc_ok = disc_ok && cubic_discriminant(cubic) == Rational(6912) * lam2 * (Rational(1) - lam2);
            const Rational at_one = cubic(Rational(1));
            at_one_ok = at_one_ok && at_one == Rational(1) - lam2 && !at_one.is_zero();
        }
        out.push_back(detail::exact_check("exact_disc_n3", disc_ok ? 0.0 : 1.0));
        out.push_back(detail::exact_check("exact_cubic_at_one", at_one_ok ? 0.0 : 1.0));
    }

    // signature 4: -1/3 is a root of 4t^3 - g2 t - g3 for every rational kappa^2,
    // and g2^3 - 27 g3^2 = kappa^4 lambda^2 != 0
    {
        bool root_ok = true;
        bool disc_ok = true;
        for (const Rational& k2 : {Rational(1, 4), Rational(9, 25), Rational(16, 25), Rational(361, 400)}) {
            const Rational g2 = Rational(4, 3) - k2;
            const Rational g3 = Rational(8, 27) - k2 / Rational(3);
            const RationalPoly cubic({-g3, -g2, Rational(0), Rational(4)});
            root_ok = root_ok && cubic(Rational(-1, 3)).is_zero();
            const Rational lam2 = Rational(1) - k2;
            const Rational delta = g2 * g2 * g2 - Rational(27) * g3 * g3;
            disc_ok = disc_ok && delta == k2 * k2 * lam2 && !delta.is_zero();
        }
        out.push_back(detail::exact_check("exact_sig4_midpoint_root", root_ok ? 0.0 : 1.0));
        out.push_back(detail::exact_check("exact_sig4_modular_disc", disc_ok ? 0.0 : 1.0));
    }

    return out;
}

// ---------------------------------------------------------------------------
// Signature 3 and signature 4 closed forms (series and pointwise vs wp).
// ---------------------------------------------------------------------------

namespace detail {

inline double wp_ode_pointwise_residual(const WeierstrassInvariants& inv) {
    const WeierstrassP wp(inv);
    double worst = 0.0;
    for (Complex z : sample_outer_annulus(wp.trusted_radius(), 12)) {
        const Complex P = wp.eval(z);
        const Complex Pp = wp.eval_prime(z);
        worst = std::max(worst, std::abs(Pp * Pp - 4.0 * P * P * P + inv.g2 * P + inv.g3));
    }
    return worst;
}

}  // namespace detail

inline std::vector<TheoremCheck> check_sig3_sig4_closed_forms(double kappa, const Tolerances& tol,
                                                              int order) {
    std::vector<TheoremCheck> out;
    const double lam2 = 1.0 - kappa * kappa;

    // --- signature 4: a = 1/4 (even case, n = 2) ---
    {
        const ModulusParams p(Rational(1, 4), kappa);
        const AnalogueSet set = AnalogueSet::build(p, order);
        const int through = set.order() - 2;
        const TruncatedSeries& d = set.d();
        const TruncatedSeries& nb = set.nabla();
        const TruncatedSeries dp = derivative(d);

        out.push_back(detail::series_check(
            "sig4_d_ode", p,
            series_residual(dp * dp, Complex(2.0) * ((1.0 - d) * (d * d - Complex(lam2))), through),
            tol.series));
        out.push_back(detail::series_check(
            "sig4_nabla_linear", p, series_residual(nb, Complex(0.5) * (d + 1.0)), tol.series));
        out.push_back(detail::series_check(
            "sig4_s2_identity", p,
            series_residual(Complex(kappa * kappa) * (set.s() * set.s()),
                            Complex(4.0) * (nb * (1.0 - nb))),
            tol.series));
        out.push_back(detail::series_check(
            "sig4_delta_sq", p,
            series_residual(set.delta() * set.delta(),
                            ((Complex(2.0) * nb - 1.0) * (Complex(2.0) * nb - 1.0)) / nb),
            tol.series));

        const WeierstrassP wp(sig4_invariants(kappa));
        const double shared = std::min({set.trusted_radius(AnalogueFn::d),
                                        set.trusted_radius(AnalogueFn::c), wp.trusted_radius()});
        double rd = 0.0, rc2 = 0.0;
        for (Complex u : detail::sample_disk(0.95 * shared, 20)) {
            rd = std::max(rd, std::abs(sig4_d_closed(kappa, u) - set.eval(AnalogueFn::d, u)));
            const Complex c = set.eval(AnalogueFn::c, u);
            rc2 = std::max(rc2, std::abs(sig4_c2_closed(kappa, u) - c * c));
        }
        out.push_back(detail::pointwise_check("sig4_d_closed", p.a.str(), kappa, rd, tol.pointwise));
        out.push_back(detail::pointwise_check("sig4_c2_closed", p.a.str(), kappa, rc2, tol.pointwise));

        const double g2 = wp.invariants().g2;
        const double g3 = wp.invariants().g3;
        const double lam = std::sqrt(lam2);
        double rmid = 0.0;
        for (double t : {1.0 / 6.0 + 0.5 * lam, 1.0 / 6.0 - 0.5 * lam})
            rmid = std::max(rmid, std::abs(4.0 * t * t * t - g2 * t - g3));
        out.push_back(detail::pointwise_check("sig4_midpoint_roots", p.a.str(), kappa, rmid, 1e-12));
        out.push_back(detail::pointwise_check("sig4_wp_ode", p.a.str(), kappa,
                                              detail::wp_ode_pointwise_residual(wp.invariants()),
                                              tol.pointwise));
    }

    // --- signature 3: a = 1/6 (even case, n = 3) ---
    {
        const ModulusParams p(Rational(1, 6), kappa);
        const AnalogueSet set = AnalogueSet::build(p, order);
        const int through = set.order() - 2;
        const TruncatedSeries& nb = set.nabla();
        const TruncatedSeries four_nb_3 = Complex(4.0) * nb - 3.0;

        out.push_back(detail::series_check(
            "sig3_delta_linear", p, series_residual(set.delta(), four_nb_3), tol.series));
        const TruncatedSeries np = derivative(nb);
        out.push_back(detail::series_check(
            "sig3_nabla_ode", p,
            series_residual(Complex(9.0) * (np * np),
                            Complex(4.0) * ((1.0 - nb) * (nb * (four_nb_3 * four_nb_3) - Complex(lam2))),
                            through),
            tol.series));
        out.push_back(detail::series_check(
            "sig3_d2_identity", p,
            series_residual(set.d() * set.d(), nb * (four_nb_3 * four_nb_3)), tol.series));

        const WeierstrassP wp(sig3_invariants(kappa));
        const double shared = std::min(set.trusted_radius(AnalogueFn::delta), wp.trusted_radius());
        double rdn3 = 0.0;
        for (Complex u : detail::sample_disk(0.95 * shared, 20))
            rdn3 = std::max(rdn3, std::abs(sig3_dn3_closed(kappa, u) - set.eval(AnalogueFn::delta, u)));
        out.push_back(detail::pointwise_check("sig3_dn3_closed", p.a.str(), kappa, rdn3, tol.pointwise));
        out.push_back(detail::pointwise_check("sig3_wp_ode", p.a.str(), kappa,
                                              detail::wp_ode_pointwise_residual(wp.invariants()),
                                              tol.pointwise));
    }

    return out;
}

// ---------------------------------------------------------------------------
// Suite driver.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace detail

/// Chebyshev coefficients grow like 2^n; the polynomial-family checks are
/// refused past this point rather than allowed to consume the machine.
inline constexpr int kMaxPolynomialN = 64;

/// Runs every applicable check on the parameter grid, plus the exact
/// polynomial facts once. Deterministic given the configuration; builder
/// failures become failed checks rather than exceptions.
inline VerificationReport run_suite(const SuiteConfig& cfg = SuiteConfig::defaults()) {
    VerificationReport rep;
    rep.version = kToolVersion;
    rep.config = cfg;
    rep.timestamp = detail::utc_timestamp();

    bool saw_n1 = false;
    bool skipped_poly_family = false;
    for (const Rational& a : cfg.a_grid) {
        for (double kappa : cfg.kappa_grid) {
            try {
                const ModulusParams p(a, kappa);
                if (p.N == 1) saw_n1 = true;
                const AnalogueSet set = AnalogueSet::build(p, cfg.order);

                rep.checks.push_back(check_thm1(set, cfg.tol.series));
                rep.checks.push_back(check_psi_prime(set, cfg.tol.series));
                for (auto& c : check_local_relations(set, cfg.tol.series)) rep.checks.push_back(std::move(c));
                for (auto& c : check_thm2(set, cfg.tol.series)) rep.checks.push_back(std::move(c));
                for (auto& c : check_square_odes(set, cfg.tol.series)) rep.checks.push_back(std::move(c));
                if (p.N > kMaxPolynomialN) {
                    skipped_poly_family = true;
                } else if (p.even_case()) {
                    rep.checks.push_back(check_thm3_even(set, cfg.tol.series));
                    for (auto& c : check_thm4_thm5_even(set, cfg.tol.series))
                        rep.checks.push_back(std::move(c));
                    if ((p.N / 2) % 2 == 1)
                        rep.checks.push_back(check_remark_delta_vm(set, cfg.tol.series));
                } else if (p.odd_case()) {
                    for (auto& c : check_thm7_8_9_odd(set, cfg.tol.series))
                        rep.checks.push_back(std::move(c));
                }
            } catch (const std::exception& e) {
                rep.checks.push_back(TheoremCheck{"build_error", a.str(), kappa, CheckMode::series,
                                                  1.0, 0.0, false});
                rep.notes.push_back("build failed for a=" + a.str() + ": " + e.what());
            }
        }
    }

    for (double kappa : cfg.kappa_grid) {
        try {
            for (auto& c : check_sig3_sig4_closed_forms(kappa, cfg.tol, cfg.order))
                rep.checks.push_back(std::move(c));
        } catch (const std::exception& e) {
            rep.checks.push_back(TheoremCheck{"closed_forms_build_error", "-", kappa,
                                              CheckMode::pointwise, 1.0, 0.0, false});
            rep.notes.push_back("closed-form checks failed at kappa=" + std::to_string(kappa) +
                                ": " + e.what());
        }
    }

    for (auto& c : exact_polynomial_checks()) rep.checks.push_back(std::move(c));

    rep.notes.push_back(
        "ellipticity conclusions are represented only by their checkable ingredients "
        "(pole-order arithmetic, zero-value substitutions, exact polynomial facts); "
        "the suite does not test ellipticity itself.");
    rep.notes.push_back(
        "the odd-case pole analysis has no closed statement to check; no check covers it.");
    if (saw_n1)
        rep.notes.push_back(
            "grid includes a = 1 (n = 1): the odd-case checks run on it, but it sits outside "
            "the documented signatures.");
    if (skipped_poly_family)
        rep.notes.push_back("polynomial-family checks skipped where 1/a exceeds " +
                            std::to_string(kMaxPolynomialN) +
                            "; the Chebyshev machinery is intractable there.");

    std::sort(rep.checks.begin(), rep.checks.end(), [](const TheoremCheck& x, const TheoremCheck& y) {
        if (x.id != y.id) return x.id < y.id;
        if (x.a != y.a) return x.a < y.a;
        return x.kappa < y.kappa;
    });
    return rep;
}

}  // namespace hypell
