#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "pchg/error.hpp"

namespace pchg {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::guard, "rational arithmetic overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::guard, "rational arithmetic overflow");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) fail(errc::guard, "rational arithmetic overflow");
    return -a;
}

} // namespace detail

// Exact rational number on 64-bit words, always stored with positive
// denominator and gcd(num, den) = 1. Overflow raises errc::guard instead of
// wrapping; all instances in this project stay far below the limit.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value), den_(1) {}
    Rational(int value) : num_(value), den_(1) {}

    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    static Rational parse(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(detail::checked_neg(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t g = std::gcd(a.den_, b.den_);
        std::int64_t bd = b.den_ / g;
        std::int64_t num = detail::checked_add(detail::checked_mul(a.num_, bd),
                                               detail::checked_mul(b.num_, a.den_ / g));
        std::int64_t den = detail::checked_mul(a.den_, bd);
        return Rational(num, den);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t g1 = std::gcd(std::abs(a.num_), b.den_);
        std::int64_t g2 = std::gcd(std::abs(b.num_), a.den_);
        std::int64_t num = detail::checked_mul(a.num_ / g1, b.num_ / g2);
        std::int64_t den = detail::checked_mul(a.den_ / g2, b.den_ / g1);
        return Rational(num, den);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) fail(errc::validation, "division of rational by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational pow(int exponent) const {
        if (exponent < 0) return Rational(1) / pow(-exponent);
        Rational result(1);
        for (int i = 0; i < exponent; ++i) result *= *this;
        return result;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Canonical text form: "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) fail(errc::validation, "rational with zero denominator");
        if (den_ < 0) {
            num_ = detail::checked_neg(num_);
            den_ = detail::checked_neg(den_);
        }
        std::int64_t g = std::gcd(std::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> long long {
        long long value = 0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            fail(errc::validation, "malformed rational literal: '" + std::string(s) + "'");
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

// Multinomial coefficient n! / (parts_0! * parts_1! * ...); parts must be
// nonnegative and sum to n.
inline Rational multinomial(int n, const std::vector<long long>& parts) {
    Rational r = factorial(n);
    long long total = 0;
    for (long long p : parts) {
        if (p < 0) fail(errc::validation, "negative multinomial part");
        total += p;
        for (int i = 2; i <= p; ++i) r /= Rational(i);
    }
    if (total != n) fail(errc::validation, "multinomial parts do not sum to n");
    return r;
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    return multinomial(n, {static_cast<long long>(k), static_cast<long long>(n - k)});
}

} // namespace pchg
