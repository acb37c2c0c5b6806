#include "doctest.h"

#include <random>

#include "npinv/homog.hpp"

using namespace npinv;

namespace {

BivariatePolynomial P(const std::string& s) { return parse_polynomial(s); }

struct Planted {
    BivariatePolynomial poly;
    Weight kappa;
    int a, b, p, q;
    std::vector<std::pair<Rational, int>> roots;
};

Planted plant(std::mt19937& rng) {
    std::uniform_int_distribution<int> pd(1, 4), qd(1, 3), ad(0, 3), md(1, 3), nd(1, 3);
    std::uniform_int_distribution<long> numd(-6, 6), dend(1, 4);
    Planted out;
    do {
        out.p = pd(rng);
        out.q = qd(rng);
    } while (std::gcd(out.p, out.q) != 1);
    out.a = ad(rng);
    out.b = ad(rng);
    int n = nd(rng);
    for (int i = 0; i < n; ++i) {
        long num = numd(rng);
        if (num == 0) num = 1;
        Rational lambda = make_rational(num, dend(rng));
        bool dup = false;
        for (auto& [r, m] : out.roots) dup |= (r == lambda);
        if (dup) continue;
        out.roots.push_back({lambda, md(rng)});
    }
    BivariatePolynomial poly = BivariatePolynomial::monomial(make_rational(2, 3), out.a, out.b);
    for (auto& [lambda, mult] : out.roots) {
        BivariatePolynomial factor =
            BivariatePolynomial::monomial(Rational(1), 0, out.q) -
            BivariatePolynomial::monomial(lambda, out.p, 0);
        poly = poly * factor.pow(mult);
    }
    out.poly = poly;
    long total = 0;
    for (auto& [lambda, mult] : out.roots) total += mult;
    long D = out.a * out.q + out.b * out.p + out.p * out.q * total;
    out.kappa = Weight{make_rational(out.q, D), make_rational(out.p, D)};
    return out;
}

} // namespace

TEST_CASE("factorize: spec examples") {
    Weight k{make_rational(1, 4), make_rational(1, 2)};
    auto f = factorize_homogeneous(P("(x2 - x1^2)^2"), k);
    CHECK(f.constant == 1);
    CHECK(f.nu1 == 0);
    CHECK(f.nu2 == 0);
    CHECK(f.p == 2);
    CHECK(f.q == 1);
    REQUIRE(f.roots.size() == 1);
    CHECK(f.roots[0].multiplicity == 2);
    CHECK(f.roots[0].real);
    CHECK(*f.roots[0].exact == 1);

    Weight k2{make_rational(1, 4), make_rational(1, 4)};
    auto g = factorize_homogeneous(P("x1^2*x2^2"), k2);
    CHECK(g.constant == 1);
    CHECK(g.nu1 == 2);
    CHECK(g.nu2 == 2);
    CHECK(g.roots.empty());

    Weight k3{make_rational(1, 3), make_rational(1, 3)};
    auto h = factorize_homogeneous(P("x2^3 - x1^2*x2"), k3);
    CHECK(h.nu1 == 0);
    CHECK(h.nu2 == 1);
    CHECK(h.p == 1);
    CHECK(h.q == 1);
    REQUIRE(h.roots.size() == 2);
    for (const auto& r : h.roots) {
        CHECK(r.real);
        CHECK(r.multiplicity == 1);
        CHECK((*r.exact == 1 || *r.exact == -1));
    }

    CHECK_THROWS_AS(factorize_homogeneous(P("x2^2 + x1"), k), PreconditionError);
    CHECK_THROWS_AS(
        factorize_homogeneous(P("x2^2"), Weight{Rational(0), make_rational(1, 2)}),
        PreconditionError);
}

TEST_CASE("factorization round-trip and planted recovery") {
    std::mt19937 rng(1234);
    int done = 0;
    while (done < 100) {
        Planted pl = plant(rng);
        if (pl.poly.total_degree() > degree_guard()) continue;
        auto f = factorize_homogeneous(pl.poly, pl.kappa);
        CHECK(f.expand() == pl.poly);
        CHECK(f.nu1 == pl.a);
        CHECK(f.nu2 == pl.b);
        CHECK(f.p == pl.p);
        CHECK(f.q == pl.q);
        // recovered roots match the planted set exactly
        std::size_t matched = 0;
        for (auto& [lambda, mult] : pl.roots) {
            for (const auto& r : f.roots)
                if (r.real && r.exact && *r.exact == lambda && r.multiplicity == mult) {
                    ++matched;
                    break;
                }
        }
        CHECK(matched == pl.roots.size());
        ++done;
    }
}

TEST_CASE("circle_order: spec examples") {
    CHECK(circle_order(P("(x2 - x1^2)^2"),
                       Weight{make_rational(1, 4), make_rational(1, 2)}) == 2);
    CHECK(circle_order(P("x1^4 + x2^2"),
                       Weight{make_rational(1, 4), make_rational(1, 2)}) == 0);
    CHECK(circle_order(P("x2^3 - x1^2*x2"),
                       Weight{make_rational(1, 3), make_rational(1, 3)}) == 1);
}

TEST_CASE("circle_order: sign rule on all admissibility combinations") {
    // q odd, lambda > 0:  x2 - 2 x1^2
    CHECK(circle_order(P("x2 - 2*x1^2"),
                       Weight{make_rational(1, 2), Rational(1)}) == 1);
    // q odd, lambda < 0:  x2 + 2 x1^2
    CHECK(circle_order(P("x2 + 2*x1^2"),
                       Weight{make_rational(1, 2), Rational(1)}) == 1);
    // q even, lambda > 0: x2^2 - x1^3 (p odd)
    CHECK(circle_order(P("x2^2 - x1^3"),
                       Weight{make_rational(1, 3), make_rational(1, 2)}) == 1);
    // q even, lambda < 0, p odd: x2^2 + x1^3 has the zero (-1, 0)-side branch
    CHECK(circle_order(P("x2^2 + x1^3"),
                       Weight{make_rational(1, 3), make_rational(1, 2)}) == 1);
    // q even, lambda < 0 with no real branch cannot occur with coprime p, q;
    // complex roots never contribute: x1^4 + x2^2
    CHECK(circle_order(P("x1^4 + x2^2"),
                       Weight{make_rational(1, 4), make_rational(1, 2)}) == 0);
}

TEST_CASE("circle_order bounds planted real multiplicities") {
    std::mt19937 rng(77);
    int done = 0;
    while (done < 50) {
        Planted pl = plant(rng);
        if (pl.poly.total_degree() > degree_guard()) continue;
        int order = circle_order(pl.poly, pl.kappa);
        for (auto& [lambda, mult] : pl.roots) {
            bool positive = lambda > 0;
            bool admissible = (pl.q % 2 == 1) || positive || (pl.p % 2 == 1);
            if (admissible) CHECK(order >= mult);
        }
        ++done;
    }
}

TEST_CASE("positive definite principal parts have circle order zero") {
    // strictly positive on the circle; verified independently by sampling
    auto phi = P("x1^4 + x1^2*x2^2 + x2^4");
    Weight k{make_rational(1, 4), make_rational(1, 4)};
    CHECK(circle_order(phi, k) == 0);
    for (int i = 0; i <= 64; ++i) {
        double t = 2.0 * 3.14159265358979 * i / 64.0;
        CHECK(evaluate(phi, std::cos(t), std::sin(t)) > 0.0);
    }
}

TEST_CASE("homogeneous_height: examples and lower bound") {
    CHECK(homogeneous_height(P("(x2 - x1^2)^2"),
                             Weight{make_rational(1, 4), make_rational(1, 2)}) == 2);
    CHECK(homogeneous_height(P("x1^4 + x2^2"),
                             Weight{make_rational(1, 4), make_rational(1, 2)}) ==
          make_rational(4, 3));
    CHECK(homogeneous_height(P("x1^2*x2^2"),
                             Weight{make_rational(1, 4), make_rational(1, 4)}) == 2);

    std::mt19937 rng(909);
    int done = 0;
    while (done < 50) {
        Planted pl = plant(rng);
        if (pl.poly.total_degree() > degree_guard()) continue;
        Rational dh = Rational(1) / pl.kappa.modulus();
        Rational h = homogeneous_height(pl.poly, pl.kappa);
        CHECK(h >= dh);
        bool equality = (h == dh);
        bool small_order = Rational(circle_order(pl.poly, pl.kappa)) <= dh;
        CHECK(equality == small_order);
        ++done;
    }
}
