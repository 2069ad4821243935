#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hypell {

using Complex = std::complex<double>;

/// Finite Maclaurin expansion c0 + c1 t + ... + cM t^M about 0.
///
/// Values are immutable after construction and every operation is pure, so
/// series may be shared freely across threads. Binary operations truncate to
/// the shorter operand's order; coefficients are checked finite on every
/// construction (a NaN anywhere would silently poison all later checks).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
        for (const Complex& z : c_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::domain_error("series coefficients must be finite");
    }

    TruncatedSeries(std::initializer_list<Complex> coeffs)
        : TruncatedSeries(std::vector<Complex>(coeffs)) {}

    static TruncatedSeries zero(int order) {
        return TruncatedSeries(std::vector<Complex>(static_cast<std::size_t>(check_order(order)) + 1));
    }

    static TruncatedSeries constant(Complex c0, int order) {
        std::vector<Complex> v(static_cast<std::size_t>(check_order(order)) + 1);
        v[0] = c0;
        return TruncatedSeries(std::move(v));
    }

    /// The series t itself (requires order >= 1).
    static TruncatedSeries variable(int order) {
        if (order < 1) throw std::invalid_argument("variable series needs order >= 1");
        std::vector<Complex> v(static_cast<std::size_t>(order) + 1);
        v[1] = 1.0;
        return TruncatedSeries(std::move(v));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of t^k, zero beyond the truncation order.
    Complex operator[](int k) const {
        if (k < 0) throw std::out_of_range("negative coefficient index");
        return k <= order() ? c_[static_cast<std::size_t>(k)] : Complex(0.0);
    }

    const std::vector<Complex>& coeffs() const { return c_; }

    /// Copy truncated (or zero-padded) to the given order.
    TruncatedSeries truncated(int new_order) const {
        std::vector<Complex> v(static_cast<std::size_t>(check_order(new_order)) + 1);
        const std::size_t n = std::min(v.size(), c_.size());
        std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n), v.begin());
        return TruncatedSeries(std::move(v));
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("order must be >= 0");
        return order;
    }

    std::vector<Complex> c_;
};

inline TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
    const int m = std::min(x.order(), y.order());
    std::vector<Complex> v(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) v[static_cast<std::size_t>(k)] = x[k] + y[k];
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) {
    const int m = std::min(x.order(), y.order());
    std::vector<Complex> v(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) v[static_cast<std::size_t>(k)] = x[k] - y[k];
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator-(const TruncatedSeries& x) {
    std::vector<Complex> v(x.coeffs());
    for (Complex& z : v) z = -z;
    return TruncatedSeries(std::move(v));
}

/// Cauchy product truncated at the shorter operand's order.
inline TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    const int m = std::min(x.order(), y.order());
    std::vector<Complex> v(static_cast<std::size_t>(m) + 1, Complex(0.0));
    for (int i = 0; i <= m; ++i) {
        const Complex xi = x[i];
        if (xi == Complex(0.0)) continue;
        for (int j = 0; i + j <= m; ++j) v[static_cast<std::size_t>(i + j)] += xi * y[j];
    }
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator*(Complex a, const TruncatedSeries& x) {
    std::vector<Complex> v(x.coeffs());
    for (Complex& z : v) z *= a;
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator*(const TruncatedSeries& x, Complex a) { return a * x; }

inline TruncatedSeries operator+(const TruncatedSeries& x, Complex a) {
    std::vector<Complex> v(x.coeffs());
    v[0] += a;
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator+(Complex a, const TruncatedSeries& x) { return x + a; }
inline TruncatedSeries operator-(const TruncatedSeries& x, Complex a) { return x + (-a); }
inline TruncatedSeries operator-(Complex a, const TruncatedSeries& x) { return (-x) + a; }

/// Termwise derivative; drops the order by one.
inline TruncatedSeries derivative(const TruncatedSeries& x) {
    if (x.order() == 0) return TruncatedSeries::zero(0);
    std::vector<Complex> v(static_cast<std::size_t>(x.order()));
    for (int k = 1; k <= x.order(); ++k)
        v[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * x[k];
    return TruncatedSeries(std::move(v));
}

/// Termwise antiderivative with zero constant term; raises the order by one.
inline TruncatedSeries antiderivative(const TruncatedSeries& x) {
    std::vector<Complex> v(static_cast<std::size_t>(x.order()) + 2, Complex(0.0));
    for (int k = 0; k <= x.order(); ++k)
        v[static_cast<std::size_t>(k + 1)] = x[k] / static_cast<double>(k + 1);
    return TruncatedSeries(std::move(v));
}

/// Taylor coefficients of outer(inner(t)) through the shared order. The inner
/// series must vanish exactly at 0; recenter first if it does not.
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner[0] != Complex(0.0))
        throw std::domain_error("compose: inner series must have zero constant term");
    const int m = std::min(outer.order(), inner.order());
    const TruncatedSeries in = inner.order() == m ? inner : inner.truncated(m);
    TruncatedSeries acc = TruncatedSeries::constant(outer[m], m);
    for (int k = m - 1; k >= 0; --k) acc = acc * in + outer[k];
    return acc;
}

/// Multiplicative inverse; requires a nonzero constant term.
inline TruncatedSeries reciprocal(const TruncatedSeries& x) {
    if (x[0] == Complex(0.0)) throw std::domain_error("reciprocal: constant term is zero");
    const int m = x.order();
    std::vector<Complex> v(static_cast<std::size_t>(m) + 1);
    v[0] = 1.0 / x[0];
    for (int k = 1; k <= m; ++k) {
        Complex acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += x[j] * v[static_cast<std::size_t>(k - j)];
        v[static_cast<std::size_t>(k)] = -acc / x[0];
    }
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator/(const TruncatedSeries& x, const TruncatedSeries& y) {
    const int m = std::min(x.order(), y.order());
    return x.truncated(m) * reciprocal(y.truncated(m));
}

/// Compositional inverse: y with x(y(t)) = t through the order of x.
/// Newton iteration on series, seeded with t / x1; the number of correct
/// coefficients doubles each step.
inline TruncatedSeries revert(const TruncatedSeries& x) {
    if (x[0] != Complex(0.0)) throw std::domain_error("revert: series must vanish at 0");
    if (x[1] == Complex(0.0)) throw std::domain_error("revert: series needs a nonzero linear term");
    const int m = x.order();
    const TruncatedSeries id = TruncatedSeries::variable(m);
    const TruncatedSeries dx = derivative(x).truncated(m);
    TruncatedSeries y = (1.0 / x[1]) * id;
    int steps = 1;
    while ((1 << steps) <= m) ++steps;
    for (int i = 0; i <= steps; ++i) {
        const TruncatedSeries err = compose(x, y) - id;
        y = y - err / compose(dx, y);
    }
    return y;
}

/// Multiplication by t^j at fixed order (the top j coefficients fall off).
inline TruncatedSeries shifted(const TruncatedSeries& x, int j) {
    if (j < 0) throw std::invalid_argument("shifted: negative shift");
    std::vector<Complex> v(static_cast<std::size_t>(x.order()) + 1, Complex(0.0));
    for (int k = j; k <= x.order(); ++k) v[static_cast<std::size_t>(k)] = x[k - j];
    return TruncatedSeries(std::move(v));
}

/// Horner evaluation at u. No radius policing here; see AnalogueSet::eval for
/// the guarded entry point.
inline Complex evaluate(const TruncatedSeries& x, Complex u) {
    Complex acc = 0.0;
    for (int k = x.order(); k >= 0; --k) acc = acc * u + x[k];
    return acc;
}

inline double max_abs_coeff(const TruncatedSeries& x) {
    double m = 0.0;
    for (const Complex& z : x.coeffs()) m = std::max(m, std::abs(z));
    return m;
}

enum class SeriesKind { sin, cos, arcsin, sqrt1p };

/// Maclaurin series of the named elementary function; sqrt1p is sqrt(1 + t).
inline TruncatedSeries elementary_series(SeriesKind kind, int order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    std::vector<Complex> v(static_cast<std::size_t>(order) + 1, Complex(0.0));
    switch (kind) {
        case SeriesKind::sin: {
            double term = 1.0;  // (-1)^k / (2k+1)!
            for (int k = 0; 2 * k + 1 <= order; ++k) {
                if (k > 0) term /= -(2.0 * k) * (2.0 * k + 1.0);
                v[static_cast<std::size_t>(2 * k + 1)] = term;
            }
            break;
        }
        case SeriesKind::cos: {
            double term = 1.0;  // (-1)^k / (2k)!
            for (int k = 0; 2 * k <= order; ++k) {
                if (k > 0) term /= -(2.0 * k - 1.0) * (2.0 * k);
                v[static_cast<std::size_t>(2 * k)] = term;
            }
            break;
        }
        case SeriesKind::arcsin: {
            double central = 1.0;  // C(2k,k) / 4^k
            for (int k = 0; 2 * k + 1 <= order; ++k) {
                if (k > 0) central *= (2.0 * k - 1.0) / (2.0 * k);
                v[static_cast<std::size_t>(2 * k + 1)] = central / (2.0 * k + 1.0);
            }
            break;
        }
        case SeriesKind::sqrt1p: {
            double binom = 1.0;  // C(1/2, k)
            for (int k = 0; k <= order; ++k) {
                if (k > 0) binom *= (1.5 - k) / k;
                v[static_cast<std::size_t>(k)] = binom;
            }
            break;
        }
        default:
            throw std::invalid_argument("unknown elementary series kind");
    }
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries sin_series(int order) { return elementary_series(SeriesKind::sin, order); }
inline TruncatedSeries cos_series(int order) { return elementary_series(SeriesKind::cos, order); }
inline TruncatedSeries arcsin_series(int order) { return elementary_series(SeriesKind::arcsin, order); }
inline TruncatedSeries sqrt1p_series(int order) { return elementary_series(SeriesKind::sqrt1p, order); }

}  // namespace hypell
