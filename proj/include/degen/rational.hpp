#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "degen/errors.hpp"

namespace degen {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction. Always canonical:
/// gcd(|num|, den) = 1 and den >= 1. Arithmetic never rounds.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {} // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0)
            throw domain_error("Rational: zero denominator");
        v_ = Backend(std::move(num));
        v_ /= Backend(std::move(den)); // canonicalizes sign and gcd
    }

    /// Parses "num" or "num/den" (optional leading '-').
    static Rational from_string(std::string_view s);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ == b.v_) return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "num/den", or just "num" when den = 1.
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer())
            s += "/" + denominator().str();
        return s;
    }

    double to_double() const { return v_.convert_to<double>(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.to_string();
    }

private:
    using Backend = boost::multiprecision::cpp_rational;
    Backend v_;
};

inline Rational Rational::from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> BigInt {
        if (!t.empty() && t[0] == '+')
            t.remove_prefix(1);
        if (t.empty())
            throw argument_error("Rational: empty integer literal");
        std::size_t i = t[0] == '-' ? 1 : 0;
        if (i == t.size())
            throw argument_error("Rational: bare sign is not a number");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw argument_error("Rational: bad character in '" + std::string(t) + "'");
        return BigInt(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw argument_error("Rational: zero denominator in '" + std::string(s) + "'");
    return Rational(std::move(num), std::move(den));
}

/// n! as an exact integer.
inline BigInt factorial(long long n) {
    if (n < 0)
        throw argument_error("factorial: negative argument");
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
    if (n < 0)
        throw argument_error("binomial: negative n");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt b = 1;
    for (long long i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i; // divides exactly at every step
    }
    return b;
}

/// Ordinary falling factorial (n)_k = n(n-1)...(n-k+1); zero when k > n.
inline BigInt falling_factorial(long long n, long long k) {
    if (n < 0 || k < 0)
        throw argument_error("falling_factorial: negative argument");
    BigInt p = 1;
    for (long long i = 0; i < k; ++i)
        p *= n - i;
    return p;
}

/// Per-ring constants and coercions used by the generic series code.
template <typename C>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_constant(const Rational&) { return true; }
    static Rational constant_value(const Rational& q) { return q; }
};

} // namespace degen
