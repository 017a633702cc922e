#pragma once

#include <vector>

#include "degen/errors.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

/// The ordered operator product (x d/dx + r)(x d/dx + r - λ)...(x d/dx + r - (p-1)λ).
/// p = 0 is the identity.
struct OperatorSpec {
    int p = 0;
    int r = 0;

    OperatorSpec(int p_, int r_) : p(p_), r(r_) {
        if (p < 0 || r < 0)
            throw argument_error("OperatorSpec: negative argument");
    }
};

/// Antiderivative with zero constant term: x^k -> x^{k+1}/(k+1).
template <typename C>
Polynomial<C> antiderivative0(const Polynomial<C>& f) {
    if (f.is_zero())
        return Polynomial<C>();
    std::vector<C> cs(static_cast<std::size_t>(f.degree()) + 2, C(0));
    for (int k = 0; k <= f.degree(); ++k)
        cs[static_cast<std::size_t>(k) + 1] =
            f.coeff(static_cast<std::size_t>(k)) * C(Rational(BigInt(1), BigInt(k + 1)));
    return Polynomial<C>(std::move(cs));
}

/// Exact division by the variable; the constant term must vanish.
template <typename C>
Polynomial<C> div_by_var(const Polynomial<C>& f) {
    if (!(f.coeff(0) == C(0)))
        throw domain_error("div_by_var: nonzero constant term");
    if (f.is_zero())
        return Polynomial<C>();
    std::vector<C> cs(static_cast<std::size_t>(f.degree()), C(0));
    for (int k = 1; k <= f.degree(); ++k)
        cs[static_cast<std::size_t>(k) - 1] = f.coeff(static_cast<std::size_t>(k));
    return Polynomial<C>(std::move(cs));
}

/// Series division by the variable; the order drops by one.
template <typename C>
TSeries<C> div_by_var(const TSeries<C>& f) {
    if (!(f[0] == C(0)))
        throw domain_error("div_by_var: nonzero constant term");
    if (f.order() < 1)
        throw precision_error("div_by_var: order 0 input");
    TSeries<C> s(f.order() - 1);
    for (int n = 1; n <= f.order(); ++n)
        s.set(n - 1, f[n]);
    return s;
}

namespace detail {

// k + r - jλ
inline LPoly euler_shift(int k, int r, int j) {
    return LPoly(std::vector<Rational>{Rational(k + r), Rational(-j)});
}

} // namespace detail

/// Applies the operator as p sequential elementary passes; a monomial x^n
/// picks up the eigenvalue (n+r)_{p,λ}. Degree is preserved.
inline XPoly xddx_r(const XPoly& f, const OperatorSpec& spec) {
    XPoly g = f;
    for (int j = 0; j < spec.p; ++j) {
        std::vector<LPoly> cs(g.coeffs().size());
        for (std::size_t k = 0; k < cs.size(); ++k)
            cs[k] = g.coeff(k) * detail::euler_shift(static_cast<int>(k), spec.r, j);
        g = XPoly(std::move(cs));
    }
    return g;
}

/// Series form; x d/dx costs no precision, so the order is preserved.
inline TSeries<LPoly> xddx_r(const TSeries<LPoly>& f, const OperatorSpec& spec) {
    TSeries<LPoly> g = f;
    for (int j = 0; j < spec.p; ++j) {
        TSeries<LPoly> next(g.order());
        for (int k = 0; k <= g.order(); ++k)
            next.set(k, g[k] * detail::euler_shift(k, spec.r, j));
        g = next;
    }
    return g;
}

/// (1/m!) (d/dx)^m (x^m f) on an exact polynomial: x^k -> C(k+m,m) x^k.
template <typename C>
Polynomial<C> deriv_m_scaled(const Polynomial<C>& f, int m) {
    if (m < 0)
        throw argument_error("deriv_m_scaled: negative m");
    Polynomial<C> g = Polynomial<C>::monomial(C(1), static_cast<std::size_t>(m)) * f;
    for (int i = 0; i < m; ++i)
        g = derivative(g);
    return g * Polynomial<C>(C(Rational(BigInt(1), factorial(m))));
}

/// Series form. The shift by x^m stays within the declared order, so the m
/// derivatives consume m orders of buffer: the result's order is f.order() - m.
template <typename C>
TSeries<C> deriv_m_scaled(const TSeries<C>& f, int m) {
    if (m < 0)
        throw argument_error("deriv_m_scaled: negative m");
    if (f.order() < m)
        throw precision_error("deriv_m_scaled: series order too small for the m-fold derivative");
    TSeries<C> g(f.order());
    for (int j = m; j <= f.order(); ++j)
        g.set(j, f[j - m]);
    for (int i = 0; i < m; ++i)
        g = derivative(g);
    return g * C(Rational(BigInt(1), factorial(m)));
}

} // namespace degen
