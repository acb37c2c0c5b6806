#include "doctest.h"

#include <random>

#include "npinv/newton.hpp"

using namespace npinv;

namespace {

BivariatePolynomial P(const std::string& s) { return parse_polynomial(s); }

BivariatePolynomial from_support(const std::vector<Monomial>& pts) {
    BivariatePolynomial p;
    for (const auto& m : pts) p.add_term(m, Rational(1));
    return p;
}

// Membership oracle for the quadrant-union hull: a point lies in N(phi) iff
// it dominates a convex combination of two support points (the extreme rays
// are axis-aligned, so two generators suffice).
bool in_hull(const std::vector<Monomial>& support, const Rational& t1, const Rational& t2) {
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i; j < support.size(); ++j) {
            const auto& a = support[i];
            const auto& b = support[j];
            // need t in [0,1] with t*a1+(1-t)*b1 <= t1 and t*a2+(1-t)*b2 <= t2
            Rational lo(0), hi(1);
            auto clamp = [&](long av, long bv, const Rational& bound) {
                // t*av + (1-t)*bv <= bound  <=>  t*(av-bv) <= bound - bv
                Rational d(av - bv), rhs = bound - Rational(bv);
                if (d == 0) {
                    if (rhs < 0) lo = 1, hi = 0;
                } else if (d > 0) {
                    Rational u = rhs / d;
                    if (u < hi) hi = u;
                } else {
                    Rational u = rhs / d;
                    if (u > lo) lo = u;
                }
            };
            clamp(a.e1, b.e1, t1);
            clamp(a.e2, b.e2, t2);
            if (lo <= hi && hi >= 0 && lo <= 1) {
                Rational l = std::max(lo, Rational(0)), h = std::min(hi, Rational(1));
                if (l <= h) return true;
            }
        }
    return false;
}

std::vector<Monomial> random_support(std::mt19937& rng) {
    std::uniform_int_distribution<int> nd(1, 8), ed(0, 10);
    int n = nd(rng);
    std::vector<Monomial> pts;
    for (int i = 0; i < n; ++i) pts.push_back({ed(rng), ed(rng)});
    return pts;
}

} // namespace

TEST_CASE("build_polyhedron: spec examples") {
    auto np = build_polyhedron(P("(x2 - x1^2)^2 + x1^5"));
    REQUIRE(np.vertices.size() == 2);
    CHECK(np.vertices[0] == Monomial{0, 2});
    CHECK(np.vertices[1] == Monomial{4, 0});
    CHECK(np.compactEdges.size() == 1);

    auto single = build_polyhedron(P("x1^2*x2^2"));
    REQUIRE(single.vertices.size() == 1);
    CHECK(single.vertices[0] == Monomial{2, 2});
    CHECK(single.compactEdges.empty());

    auto two = build_polyhedron(P("x2^4 + x1^2"));
    REQUIRE(two.vertices.size() == 2);
    CHECK(two.vertices[0] == Monomial{0, 4});
    CHECK(two.vertices[1] == Monomial{2, 0});
    CHECK(two.compactEdges.size() == 1);

    CHECK_THROWS_AS(build_polyhedron(BivariatePolynomial()), PreconditionError);
}

TEST_CASE("hull against membership oracle on random supports") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 500; ++trial) {
        auto pts = random_support(rng);
        auto np = build_polyhedron(from_support(pts));

        // every support point lies in the hull of the vertex set
        for (const auto& p : pts)
            CHECK(in_hull(np.vertices, Rational(p.e1), Rational(p.e2)));

        // every reported vertex is extreme: it falls outside the hull of the
        // remaining support points
        for (const auto& v : np.vertices) {
            std::vector<Monomial> rest;
            for (const auto& p : pts)
                if (!(p == v)) rest.push_back(p);
            if (rest.empty()) continue;
            CHECK_FALSE(in_hull(rest, Rational(v.e1), Rational(v.e2)));
        }

        // supporting-line property of every compact edge
        for (const auto& e : np.compactEdges) {
            REQUIRE(e.weight.has_value());
            for (const auto& p : pts) {
                Rational level = e.weight->kappa1 * p.e1 + e.weight->kappa2 * p.e2;
                CHECK(level >= 1);
            }
        }
    }
}

TEST_CASE("newton_distance: examples") {
    CHECK(newton_distance(build_polyhedron(P("x2^2 + x1^4"))) == make_rational(4, 3));
    CHECK(newton_distance(build_polyhedron(P("x1^2*x2^2"))) == 2);
    CHECK(newton_distance(build_polyhedron(P("(x2 - x1^2)^4"))) == make_rational(8, 3));
}

TEST_CASE("principal_face: examples") {
    auto edge = principal_face(build_polyhedron(P("x2^2 + x1^4")));
    REQUIRE(edge.kind == FaceKind::CompactEdge);
    CHECK(edge.weight->kappa1 == make_rational(1, 4));
    CHECK(edge.weight->kappa2 == make_rational(1, 2));

    auto vert = principal_face(build_polyhedron(P("x1^2*x2^2")));
    CHECK(vert.kind == FaceKind::Vertex);
    CHECK(vert.a.t1 == 2);

    // bisectrix meets the horizontal unbounded edge of N(x2^n)
    auto unb = principal_face(build_polyhedron(P("x2^3")));
    CHECK(unb.kind == FaceKind::UnboundedHorizontal);
}

TEST_CASE("distance equals 1/|kappa| on compact principal edges") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        auto np = build_polyhedron(from_support(random_support(rng)));
        auto f = principal_face(np);
        if (f.kind == FaceKind::CompactEdge)
            CHECK(newton_distance(np) == Rational(1) / f.weight->modulus());
    }
}

TEST_CASE("kappa_principal_part: examples") {
    Weight k{make_rational(1, 4), make_rational(1, 2)};
    CHECK(kappa_principal_part(P("(x2-x1^2)^2 + x1^5"), k) == P("(x2-x1^2)^2"));
    CHECK(kappa_principal_part(P("x1^4 + x2^2"), k) == P("x1^4 + x2^2"));

    Weight k2{make_rational(1, 6), make_rational(1, 3)};
    auto phi = P("x2^3 - 2*x1^2*x2^2 + x1^4*x2");
    CHECK(kappa_principal_part(phi, k2) == phi);

    // a supporting line touching only a vertex is still supporting
    Weight vertex_line{make_rational(1, 2), make_rational(1, 2)};
    CHECK(kappa_principal_part(P("x1^4 + x2^2"), vertex_line) == P("x2^2"));

    Weight bad{make_rational(1, 3), make_rational(1, 3)};
    CHECK_THROWS_AS(kappa_principal_part(P("x1^4 + x2^2"), bad), PreconditionError);
}

TEST_CASE("kappa-homogeneity of the principal part is exact") {
    // P(r^k1 x1, r^k2 x2) = r P(x1, x2) verified as a polynomial identity by
    // checking the level of every term
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto phi = from_support(random_support(rng));
        auto f = principal_face(build_polyhedron(phi));
        if (f.kind != FaceKind::CompactEdge) continue;
        auto part = kappa_principal_part(phi, *f.weight);
        REQUIRE_FALSE(part.is_zero());
        for (const auto& [m, c] : part.terms())
            CHECK(f.weight->kappa1 * m.e1 + f.weight->kappa2 * m.e2 == 1);
    }
}

TEST_CASE("edge_sequence: examples and monotone slopes") {
    auto s1 = edge_sequence(build_polyhedron(P("x2^3 - 2*x1^2*x2^2 + x1^4*x2")));
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].kappa.kappa1 == make_rational(1, 6));
    CHECK(s1[0].kappa.kappa2 == make_rational(1, 3));
    CHECK(*s1[0].a == 2);
    CHECK_FALSE(s1[1].a.has_value());
    CHECK(s1[1].kappa.kappa1 == 0);
    CHECK(s1[1].kappa.kappa2 == 1);

    auto s2 = edge_sequence(build_polyhedron(P("x2^4")));
    REQUIRE(s2.size() == 1);
    CHECK_FALSE(s2[0].a.has_value());
    CHECK(s2[0].kappa.kappa2 == make_rational(1, 4));

    auto s3 = edge_sequence(build_polyhedron(P("x2^2 + x1^5")));
    REQUIRE(s3.size() == 1); // B_n = 0: no horizontal edge
    CHECK(*s3[0].a == make_rational(5, 2));

    std::mt19937 rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        auto seq = edge_sequence(build_polyhedron(from_support(random_support(rng))));
        for (std::size_t i = 1; i < seq.size(); ++i) {
            if (!seq[i].a.has_value()) continue; // horizontal edge is last
            CHECK(*seq[i - 1].a < *seq[i].a);
        }
    }
}
