#ifndef NPINV_NEWTON_HPP
#define NPINV_NEWTON_HPP

#include <optional>
#include <vector>

#include "npinv/polynomial.hpp"

namespace npinv {

// Point in the (t1,t2) exponent plane.
struct ExponentPoint {
    Rational t1, t2;
    bool operator==(const ExponentPoint&) const = default;
};

// Weight (kappa1, kappa2) normalizing the supporting line k1*t1 + k2*t2 = 1.
// kappa2 > 0 always; kappa1 = 0 on the horizontal unbounded edge.
struct Weight {
    Rational kappa1, kappa2;
    Rational modulus() const { return kappa1 + kappa2; } // |kappa|
    bool operator==(const Weight&) const = default;
};

enum class FaceKind { Vertex, CompactEdge, UnboundedHorizontal, UnboundedVertical };

struct Face {
    FaceKind kind = FaceKind::Vertex;
    ExponentPoint a;              // vertex, or first endpoint
    std::optional<ExponentPoint> b; // second endpoint of a compact edge
    std::optional<Weight> weight; // compact edges always; horizontal edge when defined
};

// Newton polyhedron of a nonzero polynomial at the origin: convex hull of
// the union of quadrants (alpha + R^2_+) over the Taylor support.  Vertices
// are ordered with strictly increasing first coordinate.
struct NewtonPolyhedron {
    std::vector<Monomial> vertices;
    std::vector<Face> compactEdges;    // edge l joins vertices[l-1], vertices[l]
    Face verticalEdge;                 // t1 = A_0, upward from the first vertex
    Face horizontalEdge;               // t2 = B_n, rightward from the last vertex
};

// Edge data in the paper's indexing: compact edges l = 1..n plus, when the
// last vertex has B_n >= 1, the horizontal unbounded edge as l = n+1 with
// kappa = (0, 1/B_n) and a = infinity (nullopt).
struct EdgeData {
    int index;
    Weight kappa;
    std::optional<Rational> a; // kappa2/kappa1, nullopt for the horizontal edge
};

NewtonPolyhedron build_polyhedron(const BivariatePolynomial& phi);

// Coordinate d of the intersection of the bisectrix t1 = t2 with the
// boundary of the polyhedron.
Rational newton_distance(const NewtonPolyhedron& np);

// Minimal-dimension face containing (d, d).
Face principal_face(const NewtonPolyhedron& np);

// Weight of the supporting line through a compact edge.
Weight edge_weight(const Monomial& p, const Monomial& q);

// Sum of the terms of phi on the supporting line L_kappa; errors when
// L_kappa does not support N(phi).
BivariatePolynomial kappa_principal_part(const BivariatePolynomial& phi,
                                         const Weight& kappa);

std::vector<EdgeData> edge_sequence(const NewtonPolyhedron& np);

// True when every support point satisfies k1*a1 + k2*a2 >= 1 with equality
// attained somewhere.
bool is_supporting_weight(const BivariatePolynomial& phi, const Weight& kappa);

} // namespace npinv

#endif
