#include <catch2/catch_amalgamated.hpp>

#include "degen/special.hpp"

using namespace degen;

namespace {

LPoly lp(std::vector<long long> cs) {
    std::vector<Rational> v;
    v.reserve(cs.size());
    for (long long c : cs)
        v.emplace_back(c);
    return LPoly(std::move(v));
}

} // namespace

TEST_CASE("degenerate falling factorials", "[special]") {
    CHECK(falling_factorial_deg(3, 2) == lp({9, -3}));
    CHECK(falling_factorial_deg(1, 3) == lp({1, -3, 2}));
    CHECK(falling_factorial_deg(5, 0) == LPoly(1));
    CHECK(falling_factorial_deg_x(2) == x_poly() * x_poly() - XPoly(lambda_poly()) * x_poly());
    CHECK(falling_factorial_deg_x(0) == XPoly(1));
    CHECK_THROWS_AS(falling_factorial_deg(1, -1), argument_error);
    CHECK_THROWS_AS(falling_factorial_deg_x(-2), argument_error);
}

TEST_CASE("degen params validate", "[special]") {
    DegenParams ok(3, 1);
    CHECK(ok.n == 3);
    CHECK(!ok.lambda.has_value());
    CHECK_THROWS_AS(DegenParams(-1, 0), argument_error);
    CHECK_THROWS_AS(DegenParams(0, -1), argument_error);
}

TEST_CASE("stirling triangle values", "[special]") {
    CHECK(stirling_r(0, 0, 0) == LPoly(1));
    CHECK(stirling_r(1, 0, 2) == LPoly(2));
    CHECK(stirling_r(1, 1, 2) == LPoly(1));
    for (int r = 0; r <= 3; ++r)
        CHECK(stirling_r(2, 1, r) == lp({1 + 2 * r, -1}));
    CHECK(stirling_r(3, 1, 1)(Rational(0)) == Rational(7));

    CHECK(stirling_r(4, -1, 2).is_zero());
    CHECK(stirling_r(4, 5, 2).is_zero());
    CHECK_THROWS_AS(stirling_r(-1, 0, 0), argument_error);
    CHECK_THROWS_AS(stirling_r(0, 0, -1), argument_error);

    // k = 0 column carries (r)_{n,λ}; the diagonal is 1
    for (int r = 0; r <= 3; ++r)
        for (int n = 0; n <= 6; ++n) {
            CHECK(stirling_r(n, 0, r) == falling_factorial_deg(r, n));
            CHECK(stirling_r(n, n, r) == LPoly(1));
        }
}

TEST_CASE("finite-difference oracle agrees with the recurrence", "[special]") {
    CHECK(stirling_r_oracle(0, 0, 3) == LPoly(1));
    CHECK(stirling_r_oracle(2, 0, 3) == lp({9, -3}));
    CHECK(stirling_r_oracle(2, 2, 1) == LPoly(1));
    CHECK(stirling_r_oracle(3, 4, 1).is_zero());
    CHECK_THROWS_AS(stirling_r_oracle(2, 0, -1), argument_error);

    for (int r = 0; r <= 2; ++r)
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(stirling_r(n, k, r) == stirling_r_oracle(n, k, r));
}

TEST_CASE("memoized lookups match a fresh table", "[special]") {
    StirlingTable fresh(8, 2);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(fresh.value(n, k) == stirling_r(n, k, 2));

    fresh.extend(10);
    CHECK(fresh.n_max() == 10);
    CHECK(fresh.value(10, 10) == LPoly(1));
    CHECK_THROWS_AS(fresh.value(11, 0), argument_error);
    CHECK_THROWS_AS(StirlingTable(-1, 0), argument_error);
}

TEST_CASE("partition enumeration oracle", "[special]") {
    CHECK(rstirling_count_oracle(3, 1, 0) == 3);
    CHECK(rstirling_count_oracle(3, 1, 1) == 7);
    CHECK(rstirling_count_oracle(0, 0, 0) == 1);
    CHECK(rstirling_count_oracle(0, 0, 4) == 1);
    for (int n = 0; n <= 5; ++n)
        CHECK(rstirling_count_oracle(n, n, 2) == 1);
    CHECK(rstirling_count_oracle(3, 5, 1) == 0);
    CHECK(rstirling_count_oracle(3, -1, 1) == 0);

    CHECK_THROWS_AS(rstirling_count_oracle(13, 1, 0), resource_error);
    CHECK_THROWS_AS(rstirling_count_oracle(10, 1, 3), resource_error);
    CHECK_THROWS_AS(rstirling_count_oracle(-1, 0, 0), argument_error);

    for (int r = 0; r <= 2; ++r)
        for (int n = 0; n <= 6; ++n) {
            auto counts = rstirling_partition_counts(n, r);
            for (int k = 0; k <= n; ++k)
                CHECK(stirling_r(n, k, r)(Rational(0)) ==
                      Rational(counts[static_cast<std::size_t>(k)]));
        }
}

TEST_CASE("r-Bell polynomials", "[special]") {
    CHECK(bell_r(0, 0) == XPoly(1));
    CHECK(bell_r(0, 5) == XPoly(1));
    CHECK(bell_r(1, 2) == x_poly() + XPoly(2));
    for (int r = 0; r <= 3; ++r) {
        XPoly expected = x_poly() * x_poly() + XPoly(lp({1 + 2 * r, -1})) * x_poly() +
                         XPoly(falling_factorial_deg(r, 2));
        CHECK(bell_r(2, r) == expected);
    }
    CHECK_THROWS_AS(bell_r(-1, 0), argument_error);

    for (int p = 0; p <= 5; ++p)
        for (int r = 0; r <= 3; ++r) {
            XPoly b = bell_r(p, r);
            CHECK(b.coeff(static_cast<std::size_t>(p)) == LPoly(1));
            CHECK(b.coeff(0) == falling_factorial_deg(r, p));
        }
}

TEST_CASE("Fubini polynomials", "[special]") {
    CHECK(fubini_r(1, 2) == x_poly() + XPoly(2));
    CHECK(fubini_r(2, 0) ==
          XPoly(2) * x_poly() * x_poly() + XPoly(lp({1, -1})) * x_poly());
    CHECK(poly_eval(fubini_r(2, 0), 1, 0) == Rational(3));
    CHECK_THROWS_AS(fubini_r(0, -1), argument_error);

    for (int p = 0; p <= 6; ++p)
        for (int r = 0; r <= 3; ++r) {
            XPoly f = fubini_r(p, r);
            CHECK(f.coeff(static_cast<std::size_t>(p)) == LPoly(Rational(factorial(p))));
            CHECK(f.coeff(0) == falling_factorial_deg(r, p));
        }
}

TEST_CASE("classical sequences at λ = 0, r = 0, x = 1", "[special]") {
    long long bell[] = {1, 1, 2, 5, 15, 52};
    long long fubini[] = {1, 1, 3, 13, 75, 541};
    for (int p = 0; p <= 5; ++p) {
        CHECK(poly_eval(bell_r(p, 0), 1, 0) == Rational(bell[p]));
        CHECK(poly_eval(fubini_r(p, 0), 1, 0) == Rational(fubini[p]));
    }
}

TEST_CASE("basis conversion at integer points", "[special]") {
    // sum_k S(p,k) (m)_k recovers (m+r)_{p,λ} for every integer m
    for (int r = 0; r <= 4; ++r)
        for (int p = 0; p <= 8; ++p)
            for (int m = 0; m <= 12; ++m) {
                LPoly acc;
                for (int k = 0; k <= std::min(m, p); ++k)
                    acc += stirling_r(p, k, r) * LPoly(Rational(falling_factorial(m, k)));
                CHECK(acc == falling_factorial_deg(m + r, p));
            }
}

TEST_CASE("Dobinski partial sums", "[special]") {
    // p = 0 collapses to the plain exponential sum
    CHECK(dobinski_partial(0, 3, Rational(2), Rational(1, 3), 3) ==
          Rational(1) + Rational(2) + Rational(2) + Rational(4, 3));

    Rational exact = dobinski_partial(2, 0, Rational(1), Rational(0), 40);
    double value = std::exp(-1.0) * exact.to_double();
    CHECK(std::abs(value - 2.0) < 1e-9);

    CHECK_THROWS_AS(dobinski_partial(0, 0, Rational(1), Rational(0), -1), argument_error);
}

TEST_CASE("Dobinski float evaluation with the tail guard", "[special]") {
    double v = dobinski_float(2, 0, Rational(1), Rational(0), 40, 1e-9);
    CHECK(std::abs(v - 2.0) < 1e-9);

    // the acceptance instance: p=5, r=2, λ=1/2, x=1
    double w = dobinski_float(5, 2, Rational(1), Rational(1, 2), 60, 1e-9);
    double exact = poly_eval(bell_r(5, 2), 1, Rational(1, 2)).to_double();
    CHECK(std::abs(w - exact) < 1e-9);

    double one = dobinski_float(0, 3, Rational(2), Rational(1, 3), 50, 1e-9);
    CHECK(std::abs(one - 1.0) < 1e-9);

    CHECK_THROWS_AS(dobinski_float(5, 2, Rational(1), Rational(1, 2), 3, 1e-9),
                    precision_error);
    CHECK_THROWS_AS(dobinski_float(2, 0, Rational(-1), Rational(0), 40, 1e-9), argument_error);
    CHECK_THROWS_AS(dobinski_float(2, 0, Rational(1), Rational(0), 40, 0.0), argument_error);
}
