#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "degen/errors.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Dense univariate polynomial over an exact coefficient ring, stored in
/// ascending degree. Canonical form has no trailing zero coefficients; the
/// zero polynomial is the empty list. Values are immutable in practice:
/// every operation returns a fresh normalized polynomial.
template <typename C>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long long v) : coeffs_{C(v)} { normalize(); } // NOLINT: implicit
    Polynomial(const C& c) : coeffs_{c} { normalize(); }     // NOLINT: implicit
    Polynomial(const Rational& q)                             // NOLINT: implicit
        requires(!std::is_same_v<C, Rational>)
        : Polynomial(RingOps<C>::from_rational(q)) {}
    explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial monomial(const C& c, std::size_t power) {
        std::vector<C> cs(power + 1);
        cs[power] = c;
        return Polynomial(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of the k-th power (zero beyond the stored degree).
    C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C(0); }

    const std::vector<C>& coeffs() const { return coeffs_; }

    Polynomial operator-() const {
        std::vector<C> cs(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            cs[i] = -coeffs_[i];
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<C> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
        for (std::size_t i = 0; i < cs.size(); ++i)
            cs[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<C> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
        for (std::size_t i = 0; i < cs.size(); ++i)
            cs[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return Polynomial();
        std::vector<C> cs(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(cs));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Horner evaluation in the polynomial's own variable.
    C operator()(const C& at) const {
        C acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            acc = acc * at + coeffs_[k];
        return acc;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == C(0))
            coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

/// Polynomial in the degeneracy parameter λ over the rationals.
using LPoly = Polynomial<Rational>;

/// Polynomial in x whose coefficients are λ-polynomials.
using XPoly = Polynomial<LPoly>;

/// The monomial λ.
inline LPoly lambda_poly() { return LPoly::monomial(Rational(1), 1); }

/// The monomial x.
inline XPoly x_poly() { return XPoly::monomial(LPoly(1), 1); }

template <typename C>
struct RingOps<Polynomial<C>> {
    static Polynomial<C> from_rational(const Rational& q) {
        return Polynomial<C>(RingOps<C>::from_rational(q));
    }
    static bool is_constant(const Polynomial<C>& p) {
        return p.degree() <= 0 && (p.is_zero() || RingOps<C>::is_constant(p.coeff(0)));
    }
    static Rational constant_value(const Polynomial<C>& p) {
        return p.is_zero() ? Rational(0) : RingOps<C>::constant_value(p.coeff(0));
    }
    static Polynomial<C> lambda() {
        if constexpr (std::is_same_v<C, Rational>)
            return lambda_poly();
        else
            return Polynomial<C>(RingOps<C>::lambda());
    }
};

/// Substitutes a numeric λ, leaving a rational polynomial in x.
inline Polynomial<Rational> eval_lambda(const XPoly& p, const Rational& lam) {
    std::vector<Rational> cs;
    cs.reserve(p.coeffs().size());
    for (const LPoly& c : p.coeffs())
        cs.push_back(c(lam));
    return Polynomial<Rational>(std::move(cs));
}

/// Substitutes a numeric x, leaving a λ-polynomial.
inline LPoly eval_x(const XPoly& p, const Rational& x0) { return p(LPoly(x0)); }

/// Exact value of p at (x0, λ0).
inline Rational poly_eval(const XPoly& p, const Rational& x0, const Rational& lam0) {
    return eval_lambda(p, lam0)(x0);
}

/// Termwise derivative in the polynomial's own variable.
template <typename C>
Polynomial<C> derivative(const Polynomial<C>& p) {
    if (p.degree() < 1)
        return Polynomial<C>();
    std::vector<C> cs(p.degree());
    for (int k = 1; k <= p.degree(); ++k)
        cs[k - 1] = p.coeff(k) * C(k);
    return Polynomial<C>(std::move(cs));
}

/// The product y(y - λ)(y - 2λ)...(y - (n-1)λ) in any ring containing y and λ.
template <typename C>
C degen_falling(const C& y, const C& lam, int n) {
    if (n < 0)
        throw argument_error("degen_falling: negative index");
    C prod(1);
    C shift(0);
    for (int j = 0; j < n; ++j) {
        prod = prod * (y - shift);
        shift = shift + lam;
    }
    return prod;
}

namespace detail {

inline std::string coeff_prefix(const Rational& magnitude, bool has_symbol) {
    if (!has_symbol)
        return magnitude.to_string();
    if (magnitude == Rational(1))
        return "";
    std::string s = magnitude.to_string();
    if (s.find('/') != std::string::npos)
        return "(" + s + ")";
    return s;
}

inline std::string power_string(const std::string& var, std::size_t k) {
    if (k == 0)
        return "";
    if (k == 1)
        return var;
    return var + "^" + std::to_string(k);
}

} // namespace detail

inline std::string pretty(const Rational& q) { return q.to_string(); }

/// Human-readable form, ascending powers: "1 - 3λ + 2λ^2".
inline std::string pretty(const LPoly& p, const std::string& var = "λ") {
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rational& c = p.coeffs()[k];
        if (c.is_zero())
            continue;
        std::string xs = detail::power_string(var, k);
        std::string mag = detail::coeff_prefix(c.abs(), !xs.empty()) + xs;
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + mag;
        else
            out += (c.sign() < 0 ? " - " : " + ") + mag;
    }
    return out;
}

/// Human-readable form with λ-polynomial coefficients, leading term first:
/// "x^2 + (1 - λ)x".
inline std::string pretty(const XPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const LPoly& c = p.coeffs()[k];
        if (c.is_zero())
            continue;
        std::string xs = detail::power_string("x", k);
        std::size_t terms = 0;
        for (const Rational& q : c.coeffs())
            if (!q.is_zero())
                ++terms;
        std::string mag;
        int sign = 1;
        if (terms == 1) {
            std::size_t j = c.coeffs().size() - 1;
            const Rational& q = c.coeffs()[j];
            sign = q.sign();
            std::string ls = detail::power_string("λ", j);
            mag = detail::coeff_prefix(q.abs(), !(ls + xs).empty()) + ls + xs;
        } else {
            mag = "(" + pretty(c) + ")" + xs;
        }
        if (out.empty())
            out = (sign < 0 ? "-" : "") + mag;
        else
            out += (sign < 0 ? " - " : " + ") + mag;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const LPoly& p) { return os << pretty(p); }
inline std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << pretty(p); }

} // namespace degen
