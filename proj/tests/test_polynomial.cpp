#include "doctest.h"

#include <cmath>
#include <random>

#include "npinv/polynomial.hpp"

using namespace npinv;

namespace {

BivariatePolynomial P(const std::string& s) { return parse_polynomial(s); }

BivariatePolynomial random_poly(std::mt19937& rng, int max_terms = 6, int max_exp = 9) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<long> numd(-20, 20);
    std::uniform_int_distribution<long> dend(1, 7);
    BivariatePolynomial p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        long num = numd(rng);
        if (num == 0) num = 1;
        p.add_term({expd(rng), expd(rng)}, make_rational(num, dend(rng)));
    }
    if (p.is_zero()) p.add_term({1, 1}, Rational(1));
    return p;
}

} // namespace

TEST_CASE("parse: expansion of composite expressions") {
    auto p = P("(x2 - x1^2)^2 + x1^5");
    CHECK(p.coefficient(0, 2) == 1);
    CHECK(p.coefficient(2, 1) == -2);
    CHECK(p.coefficient(4, 0) == 1);
    CHECK(p.coefficient(5, 0) == 1);
    CHECK(p.terms().size() == 4);
}

TEST_CASE("parse: single monomial and rational coefficients") {
    auto q = P("x1^2*x2^2");
    CHECK(q.terms().size() == 1);
    CHECK(q.coefficient(2, 2) == 1);

    auto r = P("3/2*x1 - x2^3");
    CHECK(r.coefficient(1, 0) == make_rational(3, 2));
    CHECK(r.coefficient(0, 3) == -1);
    CHECK(r.terms().size() == 2);
}

TEST_CASE("parse: aliases, unary minus, whitespace") {
    CHECK(P("x^2 + y^2") == P("x1^2+x2^2"));
    CHECK(P("-x1*x2") == P("0 - x1*x2"));
    CHECK(P("-(x1 - x2)") == P("x2 - x1"));
}

TEST_CASE("parse: errors carry positions") {
    CHECK_THROWS_AS(P("x1^"), ParseError);
    CHECK_THROWS_AS(P("x3 + 1"), ParseError);
    CHECK_THROWS_AS(P("x1^-2"), ParseError);
    CHECK_THROWS_AS(P("1.5*x1"), ParseError);
    CHECK_THROWS_AS(P("x1 + + x2"), ParseError);
    try {
        P("x1 * z");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("print/parse round-trip on random polynomials") {
    std::mt19937 rng(7121);
    for (int i = 0; i < 500; ++i) {
        auto p = random_poly(rng);
        CHECK(parse_polynomial(p.print()) == p);
    }
    CHECK(BivariatePolynomial().print() == "0");
}

TEST_CASE("shear: paper example and identity jet") {
    auto phi = P("(x2 - x1^2)^2 + x1^5");
    auto sheared = shear_substitute(phi, {{Rational(1), 2}});
    CHECK(sheared == P("x2^2 + x1^5"));

    CHECK(shear_substitute(phi, {}) == phi);
}

TEST_CASE("shear: linear jet") {
    auto phi = P("(x1 + x2)^2 + x1^4");
    auto sheared = shear_substitute(phi, {{Rational(-1), 1}});
    CHECK(sheared == P("x2^2 + x1^4"));
}

TEST_CASE("shear: single-term jets invert") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> numd(-5, 5);
    std::uniform_int_distribution<int> expd(1, 4);
    for (int i = 0; i < 50; ++i) {
        auto p = random_poly(rng, 4, 5);
        long b = numd(rng);
        if (b == 0) b = 2;
        int m = expd(rng);
        std::vector<JetTerm> jet{{make_rational(b, 3), m}};
        std::vector<JetTerm> neg{{make_rational(-b, 3), m}};
        CHECK(shear_substitute(shear_substitute(p, jet), neg) == p);
    }
}

TEST_CASE("shear: jet preconditions") {
    auto phi = P("x2^2");
    CHECK_THROWS_AS(shear_substitute(phi, {{Rational(1), 2}, {Rational(1), 2}}),
                    PreconditionError);
    CHECK_THROWS_AS(shear_substitute(phi, {{Rational(0), 1}}), PreconditionError);
}

TEST_CASE("evaluate: floating and exact") {
    CHECK(evaluate(P("x1^2*x2^2"), 2.0, 3.0) == doctest::Approx(36.0));
    CHECK(evaluate(P("(x2-x1^2)^2"), 1.0, 1.0) == doctest::Approx(0.0));
    CHECK(evaluate_exact(P("x1^4 + x2^2"), make_rational(1, 2), make_rational(1, 2)) ==
          make_rational(5, 16));
}

TEST_CASE("evaluate: float tracks exact on small-height rationals") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> numd(-8, 8);
    std::uniform_int_distribution<long> dend(1, 8);
    const double tol = std::pow(2.0, -40);
    for (int i = 0; i < 200; ++i) {
        auto p = random_poly(rng, 5, 6);
        Rational x = make_rational(numd(rng), dend(rng));
        Rational y = make_rational(numd(rng), dend(rng));
        Rational exact = evaluate_exact(p, x, y);
        double approx = evaluate(p, to_double(x), to_double(y));
        CHECK(std::abs(approx - to_double(exact)) <=
              tol * (1.0 + std::abs(to_double(exact))));
    }
}

TEST_CASE("derivatives") {
    CHECK(partial_derivative(P("x2^2"), 0, 1) == P("2*x2"));
    CHECK(partial_derivative(P("x1^2*x2^2"), 1, 1) == P("4*x1*x2"));
    CHECK(partial_derivative(P("(x2-x1^2)^2"), 2, 0) == P("-4*x2 + 12*x1^2"));
}

TEST_CASE("derivatives commute exactly") {
    std::mt19937 rng(314);
    for (int i = 0; i < 100; ++i) {
        auto p = random_poly(rng);
        CHECK(partial_derivative(partial_derivative(p, 1, 0), 0, 1) ==
              partial_derivative(partial_derivative(p, 0, 1), 1, 0));
    }
}

TEST_CASE("degree guard blocks blow-up") {
    int old = degree_guard();
    set_degree_guard(16);
    auto p = P("x1^9 + x2^9");
    CHECK_THROWS_AS(p * p, BudgetError);
    set_degree_guard(old);
}

TEST_CASE("linear substitution is exact and invertible") {
    auto p = P("x1^2*x2 - 3*x2^3");
    auto q = linear_substitute(p, Rational(1), Rational(1), Rational(0), Rational(1));
    // x1 -> x1 + x2, x2 -> x2
    CHECK(q == P("(x1+x2)^2*x2 - 3*x2^3"));
    auto back = linear_substitute(q, Rational(1), Rational(-1), Rational(0), Rational(1));
    CHECK(back == p);
    CHECK_THROWS_AS(linear_substitute(p, Rational(1), Rational(2), Rational(2), Rational(4)),
                    PreconditionError);
}
