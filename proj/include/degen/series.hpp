#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "degen/errors.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Truncated formal power series in one distinguished variable. Coefficients
/// are stored plain (ordinary generating function convention); callers that
/// need the exponential convention multiply by n! at the comparison site.
/// `order` is the highest power whose coefficient is trusted, and arithmetic
/// never lets a result claim more precision than its operands: the order of
/// a sum or product is the minimum of the operand orders, and a derivative
/// loses exactly one order.
template <typename C>
class TSeries {
public:
    explicit TSeries(int order) : coeffs_(checked_size(order), C(0)) {}

    TSeries(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        std::size_t n = checked_size(order);
        if (coeffs_.size() > n)
            throw argument_error("TSeries: more coefficients than order allows");
        coeffs_.resize(n, C(0));
    }

    static TSeries constant(const C& c, int order) {
        TSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// Truncated view of an exact polynomial.
    static TSeries from_polynomial(const Polynomial<C>& p, int order) {
        TSeries s(order);
        for (int n = 0; n <= order; ++n)
            s.coeffs_[n] = p.coeff(n);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const C& operator[](int n) const {
        if (n < 0 || n > order())
            throw precision_error("TSeries: coefficient beyond trusted order");
        return coeffs_[static_cast<std::size_t>(n)];
    }

    void set(int n, C v) {
        if (n < 0 || n > order())
            throw argument_error("TSeries: index out of range");
        coeffs_[static_cast<std::size_t>(n)] = std::move(v);
    }

    const std::vector<C>& coeffs() const { return coeffs_; }

    TSeries truncated(int new_order) const {
        if (new_order > order())
            throw precision_error("TSeries: cannot extend trusted order");
        TSeries s(new_order);
        for (int n = 0; n <= new_order; ++n)
            s.coeffs_[n] = coeffs_[n];
        return s;
    }

    TSeries operator-() const {
        TSeries s(order());
        for (int n = 0; n <= order(); ++n)
            s.coeffs_[n] = -coeffs_[n];
        return s;
    }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        int m = std::min(a.order(), b.order());
        TSeries s(m);
        for (int n = 0; n <= m; ++n)
            s.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return s;
    }

    friend TSeries operator-(const TSeries& a, const TSeries& b) {
        int m = std::min(a.order(), b.order());
        TSeries s(m);
        for (int n = 0; n <= m; ++n)
            s.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        return s;
    }

    /// Cauchy product at the minimum of the operand orders.
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        int m = std::min(a.order(), b.order());
        TSeries s(m);
        for (int n = 0; n <= m; ++n) {
            C acc(0);
            for (int i = 0; i <= n; ++i)
                acc += a.coeffs_[i] * b.coeffs_[n - i];
            s.coeffs_[n] = acc;
        }
        return s;
    }

    /// Termwise scaling by an exact ring element (order preserved).
    friend TSeries operator*(const TSeries& a, const C& c) {
        TSeries s(a.order());
        for (int n = 0; n <= a.order(); ++n)
            s.coeffs_[n] = a.coeffs_[n] * c;
        return s;
    }
    friend TSeries operator*(const C& c, const TSeries& a) { return a * c; }

    friend bool operator==(const TSeries& a, const TSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    bool is_zero() const {
        for (const C& c : coeffs_)
            if (!(c == C(0)))
                return false;
        return true;
    }

private:
    static std::size_t checked_size(int order) {
        if (order < 0)
            throw argument_error("TSeries: negative order");
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<C> coeffs_;
};

/// exp(f) = sum f^k / k!; requires f to have zero constant term.
template <typename C>
TSeries<C> exp(const TSeries<C>& f) {
    if (!(f[0] == C(0)))
        throw domain_error("series exp: nonzero constant term");
    int n = f.order();
    TSeries<C> acc = TSeries<C>::constant(C(1), n);
    TSeries<C> term = acc;
    for (int k = 1; k <= n; ++k) {
        term = (term * f) * C(Rational(BigInt(1), BigInt(k)));
        if (term.is_zero())
            break;
        acc = acc + term;
    }
    return acc;
}

/// Multiplicative inverse; requires the constant term to be a nonzero
/// rational multiple of the ring identity.
template <typename C>
TSeries<C> inverse(const TSeries<C>& f) {
    const C& u = f[0];
    if (!RingOps<C>::is_constant(u) || RingOps<C>::constant_value(u).is_zero())
        throw domain_error("series inverse: constant term is not a unit");
    Rational uinv = Rational(1) / RingOps<C>::constant_value(u);
    int n = f.order();
    TSeries<C> g(n);
    g.set(0, RingOps<C>::from_rational(uinv));
    C neg_uinv = RingOps<C>::from_rational(-uinv);
    for (int k = 1; k <= n; ++k) {
        C acc(0);
        for (int i = 1; i <= k; ++i)
            acc += f[i] * g[k - i];
        g.set(k, acc * neg_uinv);
    }
    return g;
}

/// f(g) for a series f; requires g to have zero constant term.
template <typename C>
TSeries<C> compose(const TSeries<C>& f, const TSeries<C>& g) {
    if (!(g[0] == C(0)))
        throw domain_error("series compose: inner series has nonzero constant term");
    int m = std::min(f.order(), g.order());
    TSeries<C> gm = g.truncated(m);
    TSeries<C> acc(m);
    for (int i = m; i >= 0; --i)
        acc = acc * gm + TSeries<C>::constant(f[i], m);
    return acc;
}

/// p(g) for an exact polynomial p; any g is allowed.
template <typename C>
TSeries<C> compose(const Polynomial<C>& p, const TSeries<C>& g) {
    TSeries<C> acc(g.order());
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * g + TSeries<C>::constant(p.coeff(static_cast<std::size_t>(i)), g.order());
    return acc;
}

/// Termwise derivative; the trusted order drops by exactly one.
template <typename C>
TSeries<C> derivative(const TSeries<C>& f) {
    if (f.order() < 1)
        throw precision_error("series derivative: order 0 input");
    TSeries<C> s(f.order() - 1);
    for (int n = 0; n < f.order(); ++n)
        s.set(n, f[n + 1] * C(n + 1));
    return s;
}

/// Truncated degenerate exponential e_λ^y(t): coefficient of t^n is
/// y(y-λ)...(y-(n-1)λ)/n!.
template <typename C>
TSeries<C> degen_exp(const C& y, int order) {
    if (order < 0)
        throw argument_error("degen_exp: negative order");
    C lam = RingOps<C>::lambda();
    TSeries<C> s(order);
    s.set(0, C(1));
    C prod(1);
    C shift(0);
    BigInt fact = 1;
    for (int n = 1; n <= order; ++n) {
        prod = prod * (y - shift);
        shift = shift + lam;
        fact *= n;
        s.set(n, prod * C(Rational(BigInt(1), fact)));
    }
    return s;
}

template <typename C, typename F>
auto map_coeffs(const TSeries<C>& s, F&& f) -> TSeries<decltype(f(s[0]))> {
    using R = decltype(f(s[0]));
    TSeries<R> out(s.order());
    for (int n = 0; n <= s.order(); ++n)
        out.set(n, f(s[n]));
    return out;
}

template <typename C>
std::ostream& operator<<(std::ostream& os, const TSeries<C>& s) {
    os << "[";
    for (int n = 0; n <= s.order(); ++n)
        os << (n ? ", " : "") << pretty(s[n]);
    return os << "] + O(v^" << s.order() + 1 << ")";
}

} // namespace degen
