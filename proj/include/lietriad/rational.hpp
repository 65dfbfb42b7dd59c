// Exact rational scalar used for every coordinate in the library.
// Values stay tiny in this domain (root coordinates, projections, small
// Gaussian eliminations), so a reduced int64 fraction with 128-bit
// intermediates is enough; anything that escapes that range throws.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lietriad {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(s));
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(-num_, den_, unchecked{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        // reduce cross factors first so intermediates stay small
        std::int64_t g1 = std::gcd(std::abs(a.num_), b.den_);
        std::int64_t g2 = std::gcd(std::abs(b.num_), a.den_);
        __int128 n = i128(a.num_ / (g1 ? g1 : 1)) * (b.num_ / (g2 ? g2 : 1));
        __int128 d = i128(a.den_ / (g2 ? g2 : 1)) * (b.den_ / (g1 ? g1 : 1));
        return from128(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        return a * Rational(b.den_, b.num_, unchecked{}).normalized_sign();
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // canonical text form: "p" or "p/q", sign on the numerator
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct unchecked {};
    Rational(std::int64_t n, std::int64_t d, unchecked) : num_(n), den_(d) {}
    Rational normalized_sign() const {
        if (den_ < 0) return Rational(-num_, -den_, unchecked{});
        return *this;
    }

    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational: value exceeds 64-bit range");
        return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), unchecked{});
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    void assign(std::int64_t n, std::int64_t d) {
        *this = from128(i128(n), i128(d));
    }

    static std::int64_t parse_int(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("rational: empty integer");
        std::size_t pos = 0;
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') { neg = s[pos] == '-'; ++pos; }
        if (pos == s.size()) throw std::invalid_argument("rational: bad integer");
        std::int64_t v = 0;
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw std::invalid_argument("rational: bad digit in '" + std::string(s) + "'");
            v = v * 10 + (s[pos] - '0');
        }
        return neg ? -v : v;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational operator*(std::int64_t a, const Rational& b) { return Rational(a) * b; }

} // namespace lietriad
