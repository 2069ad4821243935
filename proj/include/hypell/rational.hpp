#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "hypell/bigint.hpp"

namespace hypell {

/// Exact rational number, always normalized: positive denominator, gcd 1,
/// zero canonically stored as 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int signum() const { return num_.signum(); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;  // denominators are positive
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    std::string str() const {
        if (den_ == BigInt(1)) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Parses "p" or "p/q" with optional leading sign, e.g. "1/6", "-3", "0".
    static Rational parse(const std::string& text) {
        const std::size_t slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt::from_decimal(text), BigInt(1));
            return Rational(BigInt::from_decimal(text.substr(0, slash)),
                            BigInt::from_decimal(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("expected a rational of the form p or p/q, got '" + text + "'");
        }
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.signum() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    BigInt num_;
    BigInt den_;  // > 0
};

}  // namespace hypell
