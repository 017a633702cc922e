#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "degen/errors.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Shared parameter bundle: the r-shift, a degree index, and an optional
/// numeric λ (symbolic when absent).
struct DegenParams {
    int n = 0;
    int r = 0;
    std::optional<Rational> lambda;

    DegenParams(int n_, int r_, std::optional<Rational> lambda_ = {})
        : n(n_), r(r_), lambda(std::move(lambda_)) {
        if (n < 0 || r < 0)
            throw argument_error("DegenParams: negative index");
    }
};

/// (y)_{n,λ} = y(y-λ)...(y-(n-1)λ) with λ symbolic.
inline LPoly falling_factorial_deg(const Rational& y, int n) {
    if (n < 0)
        throw argument_error("falling_factorial_deg: negative index");
    return degen_falling(LPoly(y), lambda_poly(), n);
}

/// (x)_{n,λ} with both x and λ symbolic.
inline XPoly falling_factorial_deg_x(int n) {
    if (n < 0)
        throw argument_error("falling_factorial_deg: negative index");
    return degen_falling(x_poly(), XPoly(lambda_poly()), n);
}

/// Triangle of degenerate r-Stirling numbers of the second kind for a fixed
/// r-shift, built row by row from the triangular recurrence
///   S(n+1,k) = S(n,k-1) + (k + r - nλ) S(n,k)
/// with the k = 0 column pinned to (r)_{n,λ}.
class StirlingTable {
public:
    StirlingTable(int n_max, int r) : r_(r) {
        if (n_max < 0 || r < 0)
            throw argument_error("StirlingTable: negative argument");
        rows_.push_back({LPoly(1)});
        extend(n_max);
    }

    void extend(int n_max) {
        while (static_cast<int>(rows_.size()) - 1 < n_max) {
            int n = static_cast<int>(rows_.size()) - 1;
            const std::vector<LPoly>& prev = rows_.back();
            std::vector<LPoly> row(static_cast<std::size_t>(n) + 2);
            row[0] = falling_factorial_deg(Rational(r_), n + 1);
            for (int k = 1; k <= n + 1; ++k) {
                LPoly s = prev[static_cast<std::size_t>(k) - 1];
                if (k <= n) {
                    LPoly mult(std::vector<Rational>{Rational(k + r_), Rational(-n)});
                    s = s + mult * prev[static_cast<std::size_t>(k)];
                }
                row[static_cast<std::size_t>(k)] = std::move(s);
            }
            rows_.push_back(std::move(row));
        }
    }

    int r() const { return r_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    /// S(n,k); zero outside 0 <= k <= n.
    LPoly value(int n, int k) const {
        if (n < 0 || n > n_max())
            throw argument_error("StirlingTable: row out of range");
        if (k < 0 || k > n)
            return LPoly();
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    const std::vector<LPoly>& row(int n) const {
        if (n < 0 || n > n_max())
            throw argument_error("StirlingTable: row out of range");
        return rows_[static_cast<std::size_t>(n)];
    }

private:
    int r_;
    std::vector<std::vector<LPoly>> rows_;
};

/// Degenerate r-Stirling number of the second kind as a λ-polynomial.
/// Memoized per thread by r; results are bit-identical with and without
/// the cache.
inline LPoly stirling_r(int n, int k, int r) {
    if (n < 0 || r < 0)
        throw argument_error("stirling_r: negative argument");
    if (k < 0 || k > n)
        return LPoly();
    thread_local std::map<int, StirlingTable> tables;
    auto it = tables.find(r);
    if (it == tables.end())
        it = tables.emplace(r, StirlingTable(n, r)).first;
    else
        it->second.extend(n);
    return it->second.value(n, k);
}

/// Independent oracle: the whole row n via finite-difference conversion of
/// f(x) = (x+r)_{n,λ} into the ordinary falling-factorial basis,
/// c_k = Δ^k f(0) / k!.
inline std::vector<LPoly> stirling_row_oracle(int n, int r) {
    if (n < 0 || r < 0)
        throw argument_error("stirling_row_oracle: negative argument");
    std::vector<LPoly> f(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        f[static_cast<std::size_t>(j)] = falling_factorial_deg(Rational(j + r), n);
    std::vector<LPoly> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        LPoly acc;
        for (int i = 0; i <= k; ++i) {
            BigInt c = binomial(k, i);
            if ((k - i) % 2 != 0)
                c = -c;
            acc += f[static_cast<std::size_t>(i)] * LPoly(Rational(c));
        }
        out[static_cast<std::size_t>(k)] = acc * LPoly(Rational(BigInt(1), factorial(k)));
    }
    return out;
}

/// Same contract as stirling_r, via the finite-difference oracle.
inline LPoly stirling_r_oracle(int n, int k, int r) {
    if (n < 0 || r < 0)
        throw argument_error("stirling_r_oracle: negative argument");
    if (k < 0 || k > n)
        return LPoly();
    return stirling_row_oracle(n, r)[static_cast<std::size_t>(k)];
}

/// Brute-force histogram over all set partitions of [n+r] in which the
/// first r elements occupy distinct blocks: entry k counts the partitions
/// with exactly k+r blocks. Every partition is visited once.
inline std::vector<std::int64_t> rstirling_partition_counts(int n, int r) {
    if (n < 0 || r < 0)
        throw argument_error("rstirling_partition_counts: negative argument");
    if (n + r > 12)
        throw resource_error("rstirling_partition_counts: n + r exceeds enumeration bound 12");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    auto place = [&](auto&& self, int placed, int blocks) -> void {
        if (placed == n) {
            int k = blocks - r;
            if (k >= 0 && k <= n)
                ++counts[static_cast<std::size_t>(k)];
            return;
        }
        for (int b = 0; b < blocks; ++b)
            self(self, placed + 1, blocks);
        self(self, placed + 1, blocks + 1);
    };
    place(place, 0, r);
    return counts;
}

/// Number of partitions of [n+r] into k+r nonempty blocks with 1..r in
/// distinct blocks; equals stirling_r(n,k,r) at λ = 0.
inline std::int64_t rstirling_count_oracle(int n, int k, int r) {
    if (n < 0 || r < 0)
        throw argument_error("rstirling_count_oracle: negative argument");
    if (k < 0 || k > n)
        return 0;
    return rstirling_partition_counts(n, r)[static_cast<std::size_t>(k)];
}

/// Degenerate r-Bell polynomial: sum_k S(p,k) x^k.
inline XPoly bell_r(int p, int r) {
    if (p < 0 || r < 0)
        throw argument_error("bell_r: negative argument");
    std::vector<LPoly> cs(static_cast<std::size_t>(p) + 1);
    for (int k = 0; k <= p; ++k)
        cs[static_cast<std::size_t>(k)] = stirling_r(p, k, r);
    return XPoly(std::move(cs));
}

/// Two-variable degenerate Fubini polynomial: sum_k k! S(p,k) x^k.
inline XPoly fubini_r(int p, int r) {
    if (p < 0 || r < 0)
        throw argument_error("fubini_r: negative argument");
    std::vector<LPoly> cs(static_cast<std::size_t>(p) + 1);
    for (int k = 0; k <= p; ++k)
        cs[static_cast<std::size_t>(k)] = stirling_r(p, k, r) * LPoly(Rational(factorial(k)));
    return XPoly(std::move(cs));
}

/// Exact partial sum sum_{k=0}^{terms} (k+r)_{p,λ0} x^k / k!.
inline Rational dobinski_partial(int p, int r, const Rational& x, const Rational& lam,
                                 int terms) {
    if (p < 0 || r < 0 || terms < 0)
        throw argument_error("dobinski_partial: negative argument");
    Rational acc(0);
    Rational xpow(1);
    BigInt kfact = 1;
    for (int k = 0; k <= terms; ++k) {
        acc += degen_falling(Rational(k + r), lam, p) * xpow / Rational(kfact);
        xpow *= x;
        kfact *= k + 1;
    }
    return acc;
}

/// e^{-x} times the exact partial sum, as a double. The tail guard requires
/// the last included term to be below tol/10 with the final three terms
/// strictly decreasing in magnitude; otherwise raise the term count.
inline double dobinski_float(int p, int r, const Rational& x, const Rational& lam, int terms,
                             double tol) {
    if (p < 0 || r < 0 || terms < 0)
        throw argument_error("dobinski_float: negative argument");
    if (!(x > Rational(0)))
        throw argument_error("dobinski_float: x must be positive");
    if (!(tol > 0))
        throw argument_error("dobinski_float: tol must be positive");
    Rational acc(0);
    Rational xpow(1);
    BigInt kfact = 1;
    double tail[3] = {0, 0, 0};
    for (int k = 0; k <= terms; ++k) {
        Rational term = degen_falling(Rational(k + r), lam, p) * xpow / Rational(kfact);
        acc += term;
        tail[0] = tail[1];
        tail[1] = tail[2];
        tail[2] = std::abs(term.to_double());
        xpow *= x;
        kfact *= k + 1;
    }
    bool decreasing = terms >= 2 && tail[0] > tail[1] && tail[1] > tail[2];
    if (!decreasing || !(tail[2] < tol / 10))
        throw precision_error("dobinski_float: tail guard failed; raise the term count");
    return std::exp(-x.to_double()) * acc.to_double();
}

} // namespace degen
