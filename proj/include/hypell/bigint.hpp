#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypell {

// Sign-magnitude integer on 32-bit limbs (little endian). Sized for the exact
// Chebyshev/discriminant arithmetic in this library, where coefficients
// overflow 64-bit integers but stay far below cryptographic magnitudes.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT: implicit by design, mirrors integer literals
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m;
        if (v < 0) {
            m = static_cast<unsigned long long>(-(v + 1));
            m += 1;  // two's-complement safe for LLONG_MIN
        } else {
            m = static_cast<unsigned long long>(v);
        }
        while (m != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    static BigInt from_decimal(const std::string& text) {
        std::size_t pos = 0;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        if (pos == text.size()) throw std::invalid_argument("BigInt: empty digit string");
        BigInt out;
        for (; pos < text.size(); ++pos) {
            char ch = text[pos];
            if (ch < '0' || ch > '9') throw std::invalid_argument("BigInt: invalid digit");
            out = out * BigInt(10) + BigInt(ch - '0');
        }
        if (negative && !out.is_zero()) out.sign_ = -1;
        return out;
    }

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& x, const BigInt& y) {
        if (x.sign_ == 0) return y;
        if (y.sign_ == 0) return x;
        if (x.sign_ == y.sign_) return make(x.sign_, add_mag(x.limbs_, y.limbs_));
        int c = cmp_mag(x.limbs_, y.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) return make(x.sign_, sub_mag(x.limbs_, y.limbs_));
        return make(y.sign_, sub_mag(y.limbs_, x.limbs_));
    }

    friend BigInt operator-(const BigInt& x, const BigInt& y) { return x + (-y); }

    friend BigInt operator*(const BigInt& x, const BigInt& y) {
        if (x.sign_ == 0 || y.sign_ == 0) return BigInt();
        return make(x.sign_ * y.sign_, mul_mag(x.limbs_, y.limbs_));
    }

    friend BigInt operator/(const BigInt& x, const BigInt& y) {
        BigInt q, r;
        divmod(x, y, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& x, const BigInt& y) {
        BigInt q, r;
        divmod(x, y, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& y) { return *this = *this + y; }
    BigInt& operator-=(const BigInt& y) { return *this = *this - y; }
    BigInt& operator*=(const BigInt& y) { return *this = *this * y; }

    // Truncated-toward-zero quotient; remainder carries the numerator's sign.
    static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
        if (den.is_zero()) throw std::domain_error("BigInt: division by zero");
        quot = BigInt();
        rem = BigInt();
        if (num.is_zero()) return;
        if (cmp_mag(num.limbs_, den.limbs_) < 0) {
            rem = num;
            return;
        }
        const int nbits = bit_length(num.limbs_);
        std::vector<std::uint32_t> q(static_cast<std::size_t>(nbits + 31) / 32, 0u);
        std::vector<std::uint32_t> r;
        for (int i = nbits - 1; i >= 0; --i) {
            shl1(r);
            if (test_bit(num.limbs_, i)) {
                if (r.empty())
                    r.push_back(1u);
                else
                    r[0] |= 1u;
            }
            if (cmp_mag(r, den.limbs_) >= 0) {
                r = sub_mag(r, den.limbs_);
                q[static_cast<std::size_t>(i) / 32] |= 1u << (i % 32);
            }
        }
        quot = make(num.sign_ * den.sign_, std::move(q));
        rem = make(num.sign_, std::move(r));
    }

    static BigInt gcd(BigInt x, BigInt y) {
        x = x.abs();
        y = y.abs();
        while (!y.is_zero()) {
            BigInt q, r;
            divmod(x, y, q, r);
            x = std::move(y);
            y = std::move(r);
        }
        return x;
    }

    friend bool operator==(const BigInt& x, const BigInt& y) {
        return x.sign_ == y.sign_ && x.limbs_ == y.limbs_;
    }
    friend bool operator!=(const BigInt& x, const BigInt& y) { return !(x == y); }
    friend bool operator<(const BigInt& x, const BigInt& y) { return cmp(x, y) < 0; }
    friend bool operator>(const BigInt& x, const BigInt& y) { return cmp(x, y) > 0; }
    friend bool operator<=(const BigInt& x, const BigInt& y) { return cmp(x, y) <= 0; }
    friend bool operator>=(const BigInt& x, const BigInt& y) { return cmp(x, y) >= 0; }

    double to_double() const {
        double x = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) x = x * 4294967296.0 + static_cast<double>(limbs_[i]);
        return sign_ < 0 ? -x : x;
    }

    long long to_long_long() const {
        if (limbs_.empty()) return 0;
        if (bit_length(limbs_) > 62) throw std::overflow_error("BigInt: value exceeds long long");
        long long x = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) x = (x << 32) | static_cast<long long>(limbs_[i]);
        return sign_ < 0 ? -x : x;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> mag = limbs_;
        std::string out;
        while (!mag.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = mag.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | mag[i];
                mag[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            trim(mag);
            if (mag.empty()) {
                out = std::to_string(rem) + out;
            } else {
                char buf[16];
                std::snprintf(buf, sizeof buf, "%09llu", static_cast<unsigned long long>(rem));
                out = std::string(buf) + out;
            }
        }
        return sign_ < 0 ? "-" + out : out;
    }

private:
    static BigInt make(int sign, std::vector<std::uint32_t> limbs) {
        trim(limbs);
        BigInt r;
        if (!limbs.empty()) {
            r.sign_ = sign;
            r.limbs_ = std::move(limbs);
        }
        return r;
    }

    static void trim(std::vector<std::uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static int cmp(const BigInt& x, const BigInt& y) {
        if (x.sign_ != y.sign_) return x.sign_ < y.sign_ ? -1 : 1;
        int c = cmp_mag(x.limbs_, y.limbs_);
        return x.sign_ >= 0 ? c : -c;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const std::size_t n = std::max(a.size(), b.size());
        std::vector<std::uint32_t> out(n + 1, 0u);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry;
            if (i < a.size()) s += a[i];
            if (i < b.size()) s += b[i];
            out[i] = static_cast<std::uint32_t>(s & 0xffffffffULL);
            carry = s >> 32;
        }
        out[n] = static_cast<std::uint32_t>(carry);
        trim(out);
        return out;
    }

    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out(a.size(), 0u);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            if (s < 0) {
                s += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            out[i] = static_cast<std::uint32_t>(s);
        }
        trim(out);
        return out;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out(a.size() + b.size(), 0u);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] + carry;
                out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry != 0) {
                std::uint64_t cur = out[k] + carry;
                out[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
                ++k;
            }
        }
        trim(out);
        return out;
    }

    static int bit_length(const std::vector<std::uint32_t>& v) {
        if (v.empty()) return 0;
        int bits = 32 * static_cast<int>(v.size() - 1);
        std::uint32_t top = v.back();
        while (top != 0) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    static bool test_bit(const std::vector<std::uint32_t>& v, int i) {
        return (v[static_cast<std::size_t>(i) / 32] >> (i % 32)) & 1u;
    }

    static void shl1(std::vector<std::uint32_t>& v) {
        std::uint32_t carry = 0;
        for (auto& limb : v) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) v.push_back(1u);
    }

    int sign_ = 0;                       // -1, 0, +1; limbs_ empty iff sign_ == 0
    std::vector<std::uint32_t> limbs_;   // little endian, no leading zero limb
};

}  // namespace hypell
