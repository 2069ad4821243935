#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hypell/series.hpp"
#include "hypell/verify.hpp"

using hypell::Complex;
using hypell::TruncatedSeries;
using hypell::series_residual;

namespace {

// random series with prescribed structure; coefficients kept tame so that
// composition round trips stay well conditioned
TruncatedSeries random_series(std::mt19937& rng, int order, bool zero_const, bool unit_linear) {
    std::uniform_real_distribution<double> small(-0.5, 0.5);
    std::uniform_real_distribution<double> lin(0.75, 1.5);
    std::vector<Complex> v(static_cast<std::size_t>(order) + 1);
    for (auto& z : v) z = Complex(small(rng), small(rng));
    if (zero_const) v[0] = 0.0;
    if (unit_linear) v[1] = (small(rng) < 0 ? -1.0 : 1.0) * lin(rng);
    return TruncatedSeries(std::move(v));
}

}  // namespace

TEST_CASE("multiplication: hand-checked products") {
    const TruncatedSeries one{1.0};
    CHECK(series_residual(one * one, one) == 0.0);

    const TruncatedSeries t{0.0, 1.0};
    const TruncatedSeries t2_expect{0.0, 0.0, 1.0};
    CHECK(series_residual(t.truncated(2) * t.truncated(2), t2_expect) == 0.0);

    // (1 + t + t^2)(1 - t) = 1 - t^3, truncated at order 2: {1, 0, 0}
    const TruncatedSeries p{1.0, 1.0, 1.0};
    const TruncatedSeries q{1.0, -1.0, 0.0};
    const auto prod = p * q;
    CHECK(prod.order() == 2);
    CHECK(prod[0] == Complex(1.0));
    CHECK(prod[1] == Complex(0.0));
    CHECK(prod[2] == Complex(0.0));
}

TEST_CASE("arithmetic truncates to the shorter order") {
    const TruncatedSeries a = TruncatedSeries::constant(1.0, 5);
    const TruncatedSeries b = TruncatedSeries::constant(2.0, 3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK((a - b).order() == 3);
}

TEST_CASE("composition: hand-checked cases") {
    const TruncatedSeries t2{0.0, 0.0, 1.0};
    const TruncatedSeries t{0.0, 1.0, 0.0};
    CHECK(series_residual(compose(t2, t), t2) == 0.0);

    const TruncatedSeries one_plus_t{1.0, 1.0};
    const TruncatedSeries two_t{0.0, 2.0};
    const auto r = compose(one_plus_t, two_t);
    CHECK(r[0] == Complex(1.0));
    CHECK(r[1] == Complex(2.0));

    // exp(t + t^2) = 1 + t + (3/2) t^2 + (7/6) t^3 + O(t^4), by hand
    const TruncatedSeries exp3{1.0, 1.0, 0.5, 1.0 / 6.0};
    const TruncatedSeries inner{0.0, 1.0, 1.0, 0.0};
    const auto e = compose(exp3, inner);
    CHECK(e[0].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e[1].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e[2].real() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(e[3].real() == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("composition refuses a nonzero inner constant term") {
    const TruncatedSeries outer{1.0, 1.0, 1.0};
    const TruncatedSeries bad{0.5, 1.0, 0.0};
    CHECK_THROWS_AS(compose(outer, bad), std::domain_error);
}

TEST_CASE("reversion: fixed cases with the fixed-point oracle") {
    const TruncatedSeries t{0.0, 1.0};
    CHECK(series_residual(revert(t), t) == 0.0);

    const TruncatedSeries two_t{0.0, 2.0};
    const auto half = revert(two_t);
    CHECK(half[1] == Complex(0.5));

    // inverse of x = t + t^2, oracle: iterate y <- t - y^2 to order 4
    const TruncatedSeries x{0.0, 1.0, 1.0, 0.0, 0.0};
    TruncatedSeries oracle = TruncatedSeries::variable(4);
    for (int i = 0; i < 8; ++i) oracle = TruncatedSeries::variable(4) - oracle * oracle;
    const auto y = revert(x);
    CHECK(series_residual(y, oracle) < 1e-15);
    // signed Catalan numbers
    CHECK(y[1].real() == doctest::Approx(1.0));
    CHECK(y[2].real() == doctest::Approx(-1.0));
    CHECK(y[3].real() == doctest::Approx(2.0));
    CHECK(y[4].real() == doctest::Approx(-5.0));
}

TEST_CASE("reversion rejects series not invertible at 0") {
    CHECK_THROWS_AS(revert(TruncatedSeries{0.5, 1.0}), std::domain_error);
    CHECK_THROWS_AS(revert(TruncatedSeries{0.0, 0.0, 1.0}), std::domain_error);
}

TEST_CASE("reversion round trip on random series") {
    // residuals are judged relative to the coefficient scale of the inverse,
    // which grows combinatorially for generic inputs
    std::mt19937 rng(42);
    const TruncatedSeries id = TruncatedSeries::variable(16);
    const auto relative_residual = [&](const TruncatedSeries& lhs, const TruncatedSeries& scale) {
        double diff = 0.0;
        for (int k = 0; k <= lhs.order(); ++k) diff = std::max(diff, std::abs(lhs[k] - id[k]));
        return diff / std::max(1.0, hypell::max_abs_coeff(scale));
    };
    for (int i = 0; i < 40; ++i) {
        const auto x = random_series(rng, 16, true, true);
        const auto y = revert(x);
        CHECK(relative_residual(compose(x, y), y) < 1e-12);
        CHECK(relative_residual(compose(y, x), y) < 1e-12);
    }
}

TEST_CASE("derivative and antiderivative") {
    const TruncatedSeries t2{0.0, 0.0, 1.0};
    const auto d = derivative(t2);
    CHECK(d.order() == 1);
    CHECK(d[1] == Complex(2.0));

    const auto i = antiderivative(TruncatedSeries{1.0});
    CHECK(i.order() == 1);
    CHECK(i[0] == Complex(0.0));
    CHECK(i[1] == Complex(1.0));

    std::mt19937 rng(99);
    for (int k = 0; k < 20; ++k) {
        const auto x = random_series(rng, 12, false, false);
        // divide-then-multiply by k+1 rounds once for non-power-of-two k+1
        CHECK(series_residual(derivative(antiderivative(x)), x) < 1e-15);
    }
}

TEST_CASE("Leibniz rule holds coefficientwise") {
    std::mt19937 rng(7);
    for (int k = 0; k < 20; ++k) {
        const auto x = random_series(rng, 12, false, false);
        const auto y = random_series(rng, 12, false, false);
        const auto lhs = derivative(x * y);
        const auto rhs = derivative(x) * y.truncated(11) + x.truncated(11) * derivative(y);
        CHECK(series_residual(lhs, rhs) < 1e-14);
    }
}

TEST_CASE("elementary series") {
    const auto s = hypell::sin_series(3);
    CHECK(s[0] == Complex(0.0));
    CHECK(s[1] == Complex(1.0));
    CHECK(s[2] == Complex(0.0));
    CHECK(s[3].real() == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));

    const auto c = hypell::cos_series(2);
    CHECK(c[0] == Complex(1.0));
    CHECK(c[2].real() == doctest::Approx(-0.5).epsilon(1e-15));

    const auto r = hypell::sqrt1p_series(3);
    CHECK(r[0].real() == doctest::Approx(1.0));
    CHECK(r[1].real() == doctest::Approx(0.5));
    CHECK(r[2].real() == doctest::Approx(-0.125));
    CHECK(r[3].real() == doctest::Approx(0.0625));
    // (sqrt(1+t))^2 = 1 + t
    const auto sq = r.truncated(8);
    const auto full = hypell::sqrt1p_series(8);
    CHECK(series_residual(full * full, TruncatedSeries{1.0, 1.0}.truncated(8)) < 1e-15);

    // arcsin is the inverse of sin
    const int m = 14;
    CHECK(series_residual(compose(hypell::arcsin_series(m), hypell::sin_series(m)),
                          TruncatedSeries::variable(m)) < 1e-14);

    CHECK_THROWS_AS(hypell::elementary_series(static_cast<hypell::SeriesKind>(99), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(hypell::sin_series(-1), std::invalid_argument);
}

TEST_CASE("reciprocal and division") {
    // 1/(1 - t) = 1 + t + t^2 + ...
    const auto r = reciprocal(TruncatedSeries{1.0, -1.0}.truncated(6));
    for (int k = 0; k <= 6; ++k) CHECK(r[k].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(reciprocal(TruncatedSeries{0.0, 1.0}), std::domain_error);

    std::mt19937 rng(5);
    for (int k = 0; k < 20; ++k) {
        auto x = random_series(rng, 10, false, false);
        auto y = random_series(rng, 10, false, false) + Complex(2.0);  // keep away from 0
        CHECK(series_residual((x / y) * y, x) < 1e-13);
    }
}

TEST_CASE("shifted multiplies by powers of t") {
    const TruncatedSeries x{1.0, 2.0, 3.0};
    const auto y = shifted(x, 1);
    CHECK(y[0] == Complex(0.0));
    CHECK(y[1] == Complex(1.0));
    CHECK(y[2] == Complex(2.0));
}

TEST_CASE("Horner evaluation") {
    const TruncatedSeries x{1.0, 2.0, 3.0};
    CHECK(evaluate(x, Complex(0.5)).real() == doctest::Approx(1.0 + 1.0 + 0.75));
    CHECK(evaluate(x, Complex(0.0)) == Complex(1.0));
}

TEST_CASE("non-finite coefficients are rejected") {
    std::vector<Complex> bad = {Complex(1.0), Complex(std::numeric_limits<double>::quiet_NaN())};
    CHECK_THROWS_AS(TruncatedSeries(std::move(bad)), std::domain_error);
    std::vector<Complex> inf = {Complex(std::numeric_limits<double>::infinity())};
    CHECK_THROWS_AS(TruncatedSeries(std::move(inf)), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Complex>{}), std::invalid_argument);
}
