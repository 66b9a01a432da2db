#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "hedonic/errors.hpp"

namespace hedonic {

// Exact rational number with int64 numerator/denominator, always normalized
// (gcd 1, denominator positive). All utility arithmetic in the library is
// exact: stability frequently hinges on ties, so floating point is banned.
// Magnitudes stay tiny (utilities are small integers or 1/(t-1) fractions),
// but comparisons and products still go through __int128 so intermediate
// overflow cannot occur silently.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw BadParameter("rational with zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return Rational(-num_, den_, already_normal_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw BadParameter("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const i128 lhs = i128(a.num_) * b.den_;
        const i128 rhs = i128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Serialized as "p/q", or plain "p" for integers; parse accepts both and
    // optional surrounding whitespace. Round-trips exactly.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    static Rational parse(const std::string& text);

private:
    struct already_normal_tag {};
    constexpr Rational(long long num, long long den, already_normal_tag) : num_(num), den_(den) {}

    using i128 = __int128;

    static Rational from128(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) throw BadParameter("rational overflow");
        return Rational(static_cast<long long>(num), static_cast<long long>(den), already_normal_tag{});
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

inline Rational Rational::parse(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw ParseError("empty rational literal");
    const std::string body = text.substr(begin, end - begin + 1);
    const std::size_t slash = body.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const long long v = std::stoll(body, &used);
            if (used != body.size()) throw ParseError("trailing characters in rational: " + text);
            return Rational(v);
        }
        const std::string num_part = body.substr(0, slash);
        const std::string den_part = body.substr(slash + 1);
        const long long p = std::stoll(num_part, &used);
        if (used != num_part.size()) throw ParseError("bad rational numerator: " + text);
        const long long q = std::stoll(den_part, &used);
        if (used != den_part.size()) throw ParseError("bad rational denominator: " + text);
        if (q == 0) throw ParseError("zero denominator: " + text);
        return Rational(p, q);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational literal: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("rational literal out of range: " + text);
    }
}

}  // namespace hedonic
