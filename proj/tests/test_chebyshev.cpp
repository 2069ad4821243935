#include <doctest.h>

#include <cmath>
#include <random>

#include "hypell/chebyshev.hpp"

using hypell::cheb_t;
using hypell::cheb_v;
using hypell::Complex;
using hypell::cubic_discriminant;
using hypell::odd_factorization_check;
using hypell::q_poly;
using hypell::Rational;
using hypell::RationalPoly;
using hypell::s_n_poly;

TEST_CASE("RationalPoly basics") {
    const RationalPoly zero;
    CHECK(zero.degree() == -1);
    CHECK(zero.is_zero());
    CHECK((zero * RationalPoly::variable()).is_zero());

    const RationalPoly p({Rational(1), Rational(0), Rational(-2)});
    CHECK(p.degree() == 2);
    CHECK(p(Rational(3)) == Rational(-17));
    CHECK(p.derivative() == RationalPoly({Rational(0), Rational(-4)}));

    // trailing zeros are trimmed to canonical form
    CHECK(RationalPoly({Rational(1), Rational(0)}).degree() == 0);
    CHECK((p - p).degree() == -1);

    const RationalPoly composed = p.compose(RationalPoly({Rational(1), Rational(1)}));
    CHECK(composed(Rational(2)) == p(Rational(3)));
}

TEST_CASE("cheb_t fixed polynomials") {
    CHECK(cheb_t(0) == RationalPoly::constant(Rational(1)));
    CHECK(cheb_t(1) == RationalPoly::variable());
    CHECK(cheb_t(2) == RationalPoly({Rational(-1), Rational(0), Rational(2)}));
    CHECK(cheb_t(3) == RationalPoly({Rational(0), Rational(-3), Rational(0), Rational(4)}));
    CHECK_THROWS_AS(cheb_t(-1), std::invalid_argument);
}

TEST_CASE("cheb_t satisfies T_n(cos t) = cos nt") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        const double theta = dist(rng);
        for (int n = 0; n <= 12; ++n) {
            const Complex got = cheb_t(n)(Complex(std::cos(theta)));
            CHECK(std::abs(got - std::cos(n * theta)) < 1e-12);
        }
    }
}

TEST_CASE("cheb_v fixed polynomials and endpoint values") {
    CHECK(cheb_v(0) == RationalPoly::constant(Rational(1)));
    CHECK(cheb_v(1) == RationalPoly({Rational(-1), Rational(2)}));

    // V_1(2y - 1) = 4y - 3
    const RationalPoly arg({Rational(-1), Rational(2)});
    CHECK(cheb_v(1).compose(arg) == RationalPoly({Rational(-3), Rational(4)}));

    for (int m = 0; m <= 6; ++m) {
        const Rational v = cheb_v(m)(Rational(-1));
        CHECK(v * v == Rational((2LL * m + 1) * (2LL * m + 1)));
    }
    CHECK_THROWS_AS(cheb_v(-2), std::invalid_argument);
}

TEST_CASE("s_n_poly: T_n(x)^2 = S_n(x^2) exactly") {
    const RationalPoly x2({Rational(0), Rational(0), Rational(1)});
    for (int n = 1; n <= 12; ++n) {
        CHECK(s_n_poly(n).compose(x2) == cheb_t(n) * cheb_t(n));
        // S_n(0) is 1 for even n, 0 for odd n
        CHECK(s_n_poly(n)(Rational(0)) == (n % 2 == 0 ? Rational(1) : Rational(0)));
    }
    // S_2(y) = (2y - 1)^2, S_3(y) = y (4y - 3)^2
    CHECK(s_n_poly(2) == RationalPoly({Rational(1), Rational(-4), Rational(4)}));
    const RationalPoly y = RationalPoly::variable();
    const RationalPoly f({Rational(-3), Rational(4)});
    CHECK(s_n_poly(3) == y * f * f);
    CHECK_THROWS_AS(s_n_poly(0), std::invalid_argument);
}

TEST_CASE("T_n(0)^2 stays in {0,1}") {
    for (int n = 0; n <= 12; ++n) {
        const Rational t0 = cheb_t(n)(Rational(0));
        CHECK((t0 * t0 == Rational(0) || t0 * t0 == Rational(1)));
        CHECK(t0 * t0 == (n % 2 == 1 ? Rational(0) : Rational(1)));
    }
}

TEST_CASE("odd factorization T_{2m+1}(x) = x V_m(2x^2 - 1)") {
    for (int m = 0; m <= 8; ++m) CHECK(odd_factorization_check(m));
}

TEST_CASE("q polynomial of the odd-case zero analysis") {
    for (int m = 0; m <= 6; ++m) {
        const RationalPoly q = q_poly(m);
        CHECK(q.degree() == 2 * m + 3);
        CHECK(q(Rational(0)) == Rational(0));
        CHECK(q.derivative()(Rational(0)) == Rational((2LL * m + 1) * (2LL * m + 1)));
    }
    // m = 0: q(z) = z (z-1)^2
    CHECK(q_poly(0) == RationalPoly({Rational(0), Rational(1), Rational(-2), Rational(1)}));
}

TEST_CASE("cubic discriminant closed form") {
    CHECK(cubic_discriminant(RationalPoly({Rational(0), Rational(-1), Rational(0), Rational(1)})) ==
          Rational(4));
    CHECK(cubic_discriminant(RationalPoly({Rational(0), Rational(0), Rational(0), Rational(1)})) ==
          Rational(0));
    CHECK_THROWS_AS(cubic_discriminant(RationalPoly({Rational(1), Rational(1)})),
                    std::invalid_argument);

    // nabla (4 nabla - 3)^2 - lambda^2 has discriminant 2^8 3^3 lambda^2 (1 - lambda^2)
    const auto cubic_for = [](const Rational& lam2) {
        return RationalPoly({-lam2, Rational(9), Rational(-24), Rational(16)});
    };
    CHECK(cubic_discriminant(cubic_for(Rational(1, 4))) == Rational(1296));
    std::mt19937 rng(77);
    std::uniform_int_distribution<long long> num(1, 48);
    for (int i = 0; i < 10; ++i) {
        const long long p = num(rng);
        const Rational lam2(p, 49);
        CHECK(cubic_discriminant(cubic_for(lam2)) ==
              Rational(6912) * lam2 * (Rational(1) - lam2));
        // the roots avoid 1: the cubic evaluates to kappa^2 != 0 there
        const Rational at_one = cubic_for(lam2)(Rational(1));
        CHECK(at_one == Rational(1) - lam2);
        CHECK(!at_one.is_zero());
    }
}

TEST_CASE("polynomial evaluation at a series") {
    const hypell::TruncatedSeries x{0.5, 1.0, 0.0, 0.0};
    const auto t2 = evaluate(cheb_t(2), x);  // 2x^2 - 1 at x = 1/2 + t
    CHECK(t2[0].real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(t2[1].real() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(t2[2].real() == doctest::Approx(2.0).epsilon(1e-15));
}
