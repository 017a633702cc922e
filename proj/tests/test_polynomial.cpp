#include <catch2/catch_amalgamated.hpp>

#include "degen/polynomial.hpp"
#include "generators.hpp"

using namespace degen;

TEST_CASE("polynomials keep canonical form", "[polynomial]") {
    CHECK(LPoly().is_zero());
    CHECK(LPoly().degree() == -1);
    CHECK(LPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(LPoly(std::vector<Rational>{Rational(0)}).is_zero());

    // normalizing twice changes nothing
    LPoly p(std::vector<Rational>{Rational(2), Rational(0), Rational(5), Rational(0)});
    CHECK(LPoly(p.coeffs()) == p);

    CHECK(LPoly(7).coeff(0) == Rational(7));
    CHECK(LPoly(7).coeff(3) == Rational(0));
}

TEST_CASE("polynomial ring operations", "[polynomial]") {
    CHECK(lambda_poly() * lambda_poly() == LPoly::monomial(Rational(1), 2));

    // (x + r) + (-x) collapses to the constant r, here with r = 2
    XPoly xr = x_poly() + XPoly(2);
    CHECK(xr + (-x_poly()) == XPoly(2));

    LPoly a = LPoly(1) - lambda_poly();
    LPoly b = LPoly(1) - LPoly(2) * lambda_poly();
    CHECK(a * b == LPoly(std::vector<Rational>{Rational(1), Rational(-3), Rational(2)}));
}

TEST_CASE("polynomial evaluation", "[polynomial]") {
    XPoly p = x_poly() * x_poly() + x_poly();
    CHECK(poly_eval(p, 1, 0) == Rational(2));
    CHECK(poly_eval(XPoly(), 5, 7) == Rational(0));

    XPoly q = x_poly() * (x_poly() - XPoly(lambda_poly())); // x(x - λ)
    CHECK(poly_eval(q, 3, 1) == Rational(6));
    CHECK(eval_x(q, 3) == LPoly(std::vector<Rational>{Rational(9), Rational(-3)}));
    CHECK(eval_lambda(q, 0) ==
          Polynomial<Rational>(std::vector<Rational>{Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("ring axioms hold on random inputs", "[polynomial]") {
    testgen::Gen gen(20240817);
    for (int it = 0; it < 40; ++it) {
        LPoly a = gen.lpoly(8);
        LPoly b = gen.lpoly(8);
        LPoly c = gen.lpoly(8);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a - a == LPoly());
    }
    for (int it = 0; it < 15; ++it) {
        XPoly a = gen.xpoly(4, 3);
        XPoly b = gen.xpoly(4, 3);
        XPoly c = gen.xpoly(4, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism", "[polynomial]") {
    testgen::Gen gen(77001);
    for (int it = 0; it < 40; ++it) {
        LPoly a = gen.lpoly(6);
        LPoly b = gen.lpoly(6);
        Rational lam = gen.rational();
        CHECK((a * b)(lam) == a(lam) * b(lam));
        CHECK((a + b)(lam) == a(lam) + b(lam));
    }
    for (int it = 0; it < 15; ++it) {
        XPoly a = gen.xpoly(3, 3);
        XPoly b = gen.xpoly(3, 3);
        Rational x0 = gen.rational();
        Rational lam = gen.rational();
        CHECK(poly_eval(a * b, x0, lam) == poly_eval(a, x0, lam) * poly_eval(b, x0, lam));
        CHECK(poly_eval(a + b, x0, lam) == poly_eval(a, x0, lam) + poly_eval(b, x0, lam));
    }
}

TEST_CASE("polynomial derivative", "[polynomial]") {
    LPoly p(std::vector<Rational>{Rational(1), Rational(-3), Rational(2)});
    CHECK(derivative(p) == LPoly(std::vector<Rational>{Rational(-3), Rational(4)}));
    CHECK(derivative(LPoly(5)).is_zero());
    CHECK(derivative(LPoly()).is_zero());
}

TEST_CASE("pretty printing", "[polynomial]") {
    CHECK(pretty(LPoly()) == "0");
    CHECK(pretty(LPoly(std::vector<Rational>{Rational(1), Rational(-3), Rational(2)})) ==
          "1 - 3λ + 2λ^2");
    CHECK(pretty(LPoly(std::vector<Rational>{Rational(1, 2), Rational(-1, 2)})) ==
          "1/2 - (1/2)λ");
    CHECK(pretty(lambda_poly()) == "λ");

    XPoly bell2 = x_poly() * x_poly() +
                  XPoly(LPoly(std::vector<Rational>{Rational(1), Rational(-1)})) * x_poly();
    CHECK(pretty(bell2) == "x^2 + (1 - λ)x");
    CHECK(pretty(XPoly()) == "0");
    CHECK(pretty(x_poly()) == "x");
    CHECK(pretty(-x_poly()) == "-x");
}
