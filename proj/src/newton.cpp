#include "npinv/newton.hpp"

#include <algorithm>
#include <climits>

namespace npinv {

namespace {

// Strictly convex lower-left chain of the staircase minima.  Coordinates are
// small nonnegative integers, so long arithmetic is exact.
std::vector<Monomial> hull_vertices(std::vector<Monomial> pts) {
    // staircase minima: drop every point dominated by another
    std::sort(pts.begin(), pts.end(), [](const Monomial& a, const Monomial& b) {
        return a.e1 != b.e1 ? a.e1 < b.e1 : a.e2 < b.e2;
    });
    std::vector<Monomial> minima;
    int best_e2 = INT_MAX;
    for (const auto& p : pts) {
        // pts is sorted by e1 then e2; keep the first with each e1, and only
        // if it strictly lowers e2
        if (!minima.empty() && minima.back().e1 == p.e1) continue;
        if (p.e2 < best_e2) {
            minima.push_back(p);
            best_e2 = p.e2;
        }
    }
    // monotone chain: e1 increasing, e2 decreasing; keep strict right turns so
    // collinear interior points are dropped
    std::vector<Monomial> hull;
    for (const auto& p : minima) {
        while (hull.size() >= 2) {
            const Monomial& a = hull[hull.size() - 2];
            const Monomial& b = hull[hull.size() - 1];
            long cross = static_cast<long>(b.e1 - a.e1) * (p.e2 - a.e2) -
                         static_cast<long>(b.e2 - a.e2) * (p.e1 - a.e1);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    return hull;
}

} // namespace

Weight edge_weight(const Monomial& p, const Monomial& q) {
    // solve k1*p1 + k2*p2 = 1 = k1*q1 + k2*q2
    long det = static_cast<long>(q.e1) * p.e2 - static_cast<long>(p.e1) * q.e2;
    if (det == 0) throw InternalError("degenerate edge in weight computation");
    Weight w;
    w.kappa1 = make_rational(p.e2 - q.e2, det);
    w.kappa2 = make_rational(q.e1 - p.e1, det);
    return w;
}

NewtonPolyhedron build_polyhedron(const BivariatePolynomial& phi) {
    if (phi.is_zero()) throw PreconditionError("Newton polyhedron of the zero polynomial");
    NewtonPolyhedron np;
    np.vertices = hull_vertices(phi.support());

    for (std::size_t l = 1; l < np.vertices.size(); ++l) {
        Face f;
        f.kind = FaceKind::CompactEdge;
        f.a = {Rational(np.vertices[l - 1].e1), Rational(np.vertices[l - 1].e2)};
        f.b = ExponentPoint{Rational(np.vertices[l].e1), Rational(np.vertices[l].e2)};
        f.weight = edge_weight(np.vertices[l - 1], np.vertices[l]);
        np.compactEdges.push_back(f);
    }

    const Monomial& first = np.vertices.front();
    const Monomial& last = np.vertices.back();
    np.verticalEdge.kind = FaceKind::UnboundedVertical;
    np.verticalEdge.a = {Rational(first.e1), Rational(first.e2)};
    np.horizontalEdge.kind = FaceKind::UnboundedHorizontal;
    np.horizontalEdge.a = {Rational(last.e1), Rational(last.e2)};
    if (last.e2 >= 1)
        np.horizontalEdge.weight = Weight{Rational(0), make_rational(1, last.e2)};
    return np;
}

Rational newton_distance(const NewtonPolyhedron& np) {
    const Monomial& first = np.vertices.front();
    const Monomial& last = np.vertices.back();
    if (first.e1 >= first.e2) return Rational(first.e1); // vertical ray or first vertex
    if (last.e2 >= last.e1) return Rational(last.e2);    // horizontal ray or last vertex
    for (std::size_t l = 0; l < np.vertices.size(); ++l)
        if (np.vertices[l].e1 == np.vertices[l].e2) return Rational(np.vertices[l].e1);
    for (const auto& e : np.compactEdges) {
        // crossing edge: a above the bisectrix, b below
        if (e.a.t1 < e.a.t2 && e.b->t1 > e.b->t2)
            return Rational(1) / e.weight->modulus();
    }
    throw InternalError("bisectrix does not meet the polyhedron boundary");
}

Face principal_face(const NewtonPolyhedron& np) {
    Rational d = newton_distance(np);
    // vertex?
    for (const auto& v : np.vertices)
        if (Rational(v.e1) == d && Rational(v.e2) == d) {
            Face f;
            f.kind = FaceKind::Vertex;
            f.a = {d, d};
            return f;
        }
    // interior of a compact edge?
    for (const auto& e : np.compactEdges)
        if (e.a.t1 < d && d < e.b->t1) return e;
    // unbounded edges
    const Monomial& first = np.vertices.front();
    if (Rational(first.e1) == d && Rational(first.e2) < d) return np.verticalEdge;
    const Monomial& last = np.vertices.back();
    if (Rational(last.e2) == d && Rational(last.e1) < d) return np.horizontalEdge;
    throw InternalError("principal face not found");
}

BivariatePolynomial kappa_principal_part(const BivariatePolynomial& phi,
                                         const Weight& kappa) {
    if (!is_supporting_weight(phi, kappa))
        throw PreconditionError("weight does not support the Newton polyhedron");
    BivariatePolynomial part;
    for (const auto& [m, c] : phi.terms())
        if (kappa.kappa1 * m.e1 + kappa.kappa2 * m.e2 == 1) part.add_term(m, c);
    return part;
}

bool is_supporting_weight(const BivariatePolynomial& phi, const Weight& kappa) {
    if (phi.is_zero()) return false;
    bool touched = false;
    for (const auto& [m, c] : phi.terms()) {
        Rational level = kappa.kappa1 * m.e1 + kappa.kappa2 * m.e2;
        if (level < 1) return false;
        if (level == 1) touched = true;
    }
    return touched;
}

std::vector<EdgeData> edge_sequence(const NewtonPolyhedron& np) {
    std::vector<EdgeData> seq;
    int l = 1;
    for (const auto& e : np.compactEdges) {
        EdgeData d;
        d.index = l++;
        d.kappa = *e.weight;
        d.a = d.kappa.kappa2 / d.kappa.kappa1;
        seq.push_back(d);
    }
    const Monomial& last = np.vertices.back();
    if (last.e2 >= 1) {
        EdgeData d;
        d.index = l;
        d.kappa = *np.horizontalEdge.weight;
        d.a = std::nullopt;
        seq.push_back(d);
    }
    return seq;
}

} // namespace npinv
