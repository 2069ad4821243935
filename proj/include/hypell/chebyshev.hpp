#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypell/rational.hpp"
#include "hypell/series.hpp"

namespace hypell {

/// Dense polynomial with exact rational coefficients, lowest degree first.
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// empty list with degree() == -1.
class RationalPoly {
public:
    RationalPoly() = default;

    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly constant(Rational v) {
        return v.is_zero() ? RationalPoly() : RationalPoly({std::move(v)});
    }

    static RationalPoly variable() { return RationalPoly({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(int k) const {
        if (k < 0) throw std::out_of_range("negative coefficient index");
        return k <= degree() ? c_[static_cast<std::size_t>(k)] : Rational(0);
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    friend RationalPoly operator+(const RationalPoly& x, const RationalPoly& y) {
        std::vector<Rational> v(static_cast<std::size_t>(std::max(x.degree(), y.degree()) + 1));
        for (int k = 0; k < static_cast<int>(v.size()); ++k)
            v[static_cast<std::size_t>(k)] = x.coeff(k) + y.coeff(k);
        return RationalPoly(std::move(v));
    }

    friend RationalPoly operator-(const RationalPoly& x, const RationalPoly& y) { return x + (-y); }

    RationalPoly operator-() const {
        std::vector<Rational> v(c_);
        for (Rational& q : v) q = -q;
        return RationalPoly(std::move(v));
    }

    friend RationalPoly operator*(const RationalPoly& x, const RationalPoly& y) {
        if (x.is_zero() || y.is_zero()) return RationalPoly();
        std::vector<Rational> v(static_cast<std::size_t>(x.degree() + y.degree() + 1));
        for (int i = 0; i <= x.degree(); ++i)
            for (int j = 0; j <= y.degree(); ++j)
                v[static_cast<std::size_t>(i + j)] += x.coeff(i) * y.coeff(j);
        return RationalPoly(std::move(v));
    }

    friend RationalPoly operator*(const Rational& a, const RationalPoly& x) {
        std::vector<Rational> v(x.c_);
        for (Rational& q : v) q *= a;
        return RationalPoly(std::move(v));
    }

    friend bool operator==(const RationalPoly& x, const RationalPoly& y) { return x.c_ == y.c_; }
    friend bool operator!=(const RationalPoly& x, const RationalPoly& y) { return !(x == y); }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    Complex operator()(Complex x) const {
        Complex acc = 0.0;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + Complex(c_[k].to_double());
        return acc;
    }

    RationalPoly derivative() const {
        if (degree() < 1) return RationalPoly();
        std::vector<Rational> v(static_cast<std::size_t>(degree()));
        for (int k = 1; k <= degree(); ++k)
            v[static_cast<std::size_t>(k - 1)] = Rational(k) * coeff(k);
        return RationalPoly(std::move(v));
    }

    /// Exact polynomial composition this(inner(x)).
    RationalPoly compose(const RationalPoly& inner) const {
        RationalPoly acc;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * inner + constant(c_[k]);
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            Rational v = coeff(k);
            if (v.is_zero()) continue;
            if (!out.empty()) {
                out += v.signum() < 0 ? " - " : " + ";
                if (v.signum() < 0) v = -v;
            }
            out += v.str();
            if (k >= 1) out += "*x";
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Horner evaluation of an exact polynomial at a truncated series.
inline TruncatedSeries evaluate(const RationalPoly& p, const TruncatedSeries& x) {
    TruncatedSeries acc = TruncatedSeries::constant(p.coeff(std::max(p.degree(), 0)).to_double(), x.order());
    for (int k = std::max(p.degree(), 0) - 1; k >= 0; --k)
        acc = acc * x + Complex(p.coeff(k).to_double());
    return acc;
}

/// Chebyshev polynomial of the first kind, T_n(cos t) = cos nt.
inline RationalPoly cheb_t(int n) {
    if (n < 0) throw std::invalid_argument("cheb_t: negative degree");
    RationalPoly prev = RationalPoly::constant(Rational(1));
    if (n == 0) return prev;
    RationalPoly cur = RationalPoly::variable();
    const RationalPoly two_x = Rational(2) * RationalPoly::variable();
    for (int k = 1; k < n; ++k) {
        RationalPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Chebyshev polynomial of the third kind: V_0 = 1, V_1 = 2x - 1,
/// V_{k+1} = 2x V_k - V_{k-1}.
inline RationalPoly cheb_v(int m) {
    if (m < 0) throw std::invalid_argument("cheb_v: negative degree");
    RationalPoly prev = RationalPoly::constant(Rational(1));
    if (m == 0) return prev;
    RationalPoly cur({Rational(-1), Rational(2)});
    const RationalPoly two_x = Rational(2) * RationalPoly::variable();
    for (int k = 1; k < m; ++k) {
        RationalPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// The unique degree-n polynomial with T_n(x)^2 = S_n(x^2).
inline RationalPoly s_n_poly(int n) {
    if (n < 1) throw std::invalid_argument("s_n_poly: n must be >= 1");
    const RationalPoly tn = cheb_t(n);
    const RationalPoly sq = tn * tn;
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= sq.degree(); ++k) {
        if (k % 2 == 0) {
            v[static_cast<std::size_t>(k / 2)] = sq.coeff(k);
        } else if (!sq.coeff(k).is_zero()) {
            throw std::logic_error("s_n_poly: odd power survived, parity violated");
        }
    }
    return RationalPoly(std::move(v));
}

/// Exact check of T_{2m+1}(x) = x * V_m(2x^2 - 1).
inline bool odd_factorization_check(int m) {
    if (m < 0) throw std::invalid_argument("odd_factorization_check: negative m");
    const RationalPoly two_x2_minus_1({Rational(-1), Rational(0), Rational(2)});
    const RationalPoly rhs = RationalPoly::variable() * cheb_v(m).compose(two_x2_minus_1);
    return cheb_t(2 * m + 1) == rhs;
}

/// q(z) = z (z-1)^2 V_m(2z-1)^2, the zero-analysis polynomial of the odd case.
inline RationalPoly q_poly(int m) {
    if (m < 0) throw std::invalid_argument("q_poly: negative m");
    const RationalPoly z = RationalPoly::variable();
    const RationalPoly z_minus_1({Rational(-1), Rational(1)});
    const RationalPoly vm_at = cheb_v(m).compose(RationalPoly({Rational(-1), Rational(2)}));
    return z * z_minus_1 * z_minus_1 * vm_at * vm_at;
}

/// Discriminant of a cubic a x^3 + b x^2 + c x + d by the closed form
/// 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2.
inline Rational cubic_discriminant(const RationalPoly& p) {
    if (p.degree() != 3) throw std::invalid_argument("cubic_discriminant: degree must be exactly 3");
    const Rational a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
    return Rational(18) * a * b * c * d - Rational(4) * b * b * b * d + b * b * c * c -
           Rational(4) * a * c * c * c - Rational(27) * a * a * d * d;
}

}  // namespace hypell
