#pragma once

#include <random>
#include <vector>

#include "degen/degen.hpp"

namespace degen::testgen {

/// Deterministic random values for property-style tests.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long long int_in(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng_);
    }

    Rational rational() {
        return Rational(BigInt(int_in(-20, 20)), BigInt(int_in(1, 10)));
    }

    LPoly lpoly(int max_deg) {
        std::vector<Rational> cs(static_cast<std::size_t>(int_in(0, max_deg)) + 1);
        for (Rational& c : cs)
            c = rational();
        return LPoly(std::move(cs));
    }

    XPoly xpoly(int max_deg, int max_lambda_deg) {
        std::vector<LPoly> cs(static_cast<std::size_t>(int_in(0, max_deg)) + 1);
        for (LPoly& c : cs)
            c = lpoly(max_lambda_deg);
        return XPoly(std::move(cs));
    }

    TSeries<LPoly> lseries(int order, int max_lambda_deg, bool zero_constant_term) {
        TSeries<LPoly> s(order);
        for (int n = zero_constant_term ? 1 : 0; n <= order; ++n)
            s.set(n, lpoly(max_lambda_deg));
        return s;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace degen::testgen
