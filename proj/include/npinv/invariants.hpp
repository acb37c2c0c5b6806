#ifndef NPINV_INVARIANTS_HPP
#define NPINV_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "npinv/adapt.hpp"

namespace npinv {

// Data of one edge of N(phi^a) entering the r-height: h_l is defined
// (a_l > m only) by the intersection of Delta^(m) = {t2 = t1 + m + 1}
// with the edge's supporting line.
struct EdgeInvariant {
    int index;
    Weight kappa;
    std::optional<Rational> a;   // nullopt = infinity (horizontal edge)
    std::optional<Rational> hl;  // (1 + m k1 - k2) / (k1 + k2), present iff a > m
};

// Augmented Newton polyhedron N^r(phi^a): N(phi^a) together with the
// half-line L+ on the principal line of the linearly adapted polynomial.
struct AugmentedPolyhedron {
    NewtonPolyhedron base;
    Weight principalLine;          // L: k1 t1 + k2 t2 = 1, k2/k1 = m
    ExponentPoint halfLineEnd;     // right endpoint (A_{l0-1}, B_{l0-1})
    ExponentPoint deltaIntersection; // Delta^(m) meets the boundary here
    Rational rHeightGeometric;     // second coordinate of the intersection - 1
};

enum class SingularityTag { A, Ainfinity, D, Unknown };

struct SingularityClass {
    SingularityTag tag = SingularityTag::Unknown;
    int n = 0; // A(n-1): finite type of the x1-remainder
};

struct Interval {
    Rational greaterThan; // open lower bound; upper end is infinity
};

struct InvariantReport {
    BivariatePolynomial input;
    Rational d;                // Newton distance in the input coordinates
    Rational dLinear;          // distance after linear adaptation
    Rational h;
    int nu = 0;
    int m = 0;                 // leading jet exponent (0 when linearly adaptable)
    bool linearlyAdaptable = false;
    bool swapped = false;
    AdaptationResult adaptation;
    std::vector<EdgeInvariant> edgeInvariants; // non-adapted inputs only
    std::optional<Rational> hR;
    Rational decayRate;        // 1/h
    int logExponent = 0;       // nu
    Interval maximalRange;     // p > max(h, 2)
    Rational restrictionPcPrime;
    Rational contactIndex;     // 1/h
    std::optional<SingularityClass> singularityClass; // when dLinear < 2
};

struct ClusterIdentityReport {
    struct EdgeCheck {
        int index;
        long A_prev, B_cur;      // vertex coordinates the exponents must match
        int nu1, nu2;            // per-edge factorization axis orders
        long clusterSize;        // q * total root multiplicity on the edge
        bool pass;
    };
    std::vector<EdgeCheck> edges;
    bool pass = true;
};

// Requires a non-adapted run (nonempty jet, m >= 2).
std::vector<EdgeInvariant> edge_invariants(const AdaptationResult& adapted);

// h^r = max(d, max over edges with a_l > m of h_l); also computes the
// geometric value via the augmented polyhedron and asserts exact agreement.
Rational r_height(const AdaptationResult& adapted, const Rational& d);

AugmentedPolyhedron augmented_polyhedron(const AdaptationResult& adapted);

InvariantReport critical_exponents(const BivariatePolynomial& phi);

// Requires d < 2 in linearly adapted coordinates.
SingularityClass classify_singularity(const BivariatePolynomial& phi);

// Per-edge factorizations of the kappa^l-principal parts of phi^a reproduce
// the vertex coordinates and the Puiseux cluster bookkeeping.
ClusterIdentityReport verify_cluster_identities(const AdaptationResult& adapted);

} // namespace npinv

#endif
