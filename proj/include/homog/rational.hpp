#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "homog/errors.hpp"

namespace homog {

namespace detail {

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

// Exact rational over int64 with 128-bit intermediates. All threshold
// decisions in the library go through this type or through cmp_frac below;
// no floating point is ever used in an accept/reject decision.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit by intent
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    static Rational parse(const std::string& s);
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ArgumentError("rational division by zero");
        return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    // x^e for e >= 0.
    Rational pow(int e) const {
        if (e < 0) throw ArgumentError("negative rational exponent");
        Rational r(1);
        Rational base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = (e > 1) ? base * base : base;
            e >>= 1;
        }
        return r;
    }

    // Smallest integer >= *this.
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    double to_double() const { return double(num_) / double(den_); }

private:
    long long num_ = 0;
    long long den_ = 1;

    void assign(long long n, long long d) {
        if (d == 0) throw ArgumentError("rational with zero denominator");
        *this = from128(n, d);
    }

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw ArgumentError("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        unsigned __int128 an = n < 0 ? (unsigned __int128)(-n) : (unsigned __int128)n;
        unsigned __int128 g = detail::gcd128(an, (unsigned __int128)d);
        if (g > 1) { n /= (__int128)g; d /= (__int128)g; }
        constexpr __int128 lo = std::numeric_limits<long long>::min();
        constexpr __int128 hi = std::numeric_limits<long long>::max();
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
};

// Three-way compare of a/b against c/d with b, d > 0. Exact.
inline int cmp_frac(long long a, long long b, long long c, long long d) {
    __int128 lhs = (__int128)a * d;
    __int128 rhs = (__int128)c * b;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

inline Rational Rational::parse(const std::string& s) {
    auto bad = [&] { throw ParseError("bad rational '" + s + "', expected p or p/q"); };
    if (s.empty()) bad();
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            long long n = std::stoll(s, &pos);
            if (pos != s.size()) bad();
            return Rational(n);
        }
        std::size_t p1 = 0, p2 = 0;
        long long n = std::stoll(s.substr(0, slash), &p1);
        long long d = std::stoll(s.substr(slash + 1), &p2);
        if (p1 != slash || p2 != s.size() - slash - 1) bad();
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        bad();
    } catch (const std::out_of_range&) {
        bad();
    }
    return Rational(); // unreachable
}

inline std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace homog
