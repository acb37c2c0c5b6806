#include "npinv/invariants.hpp"

#include <climits>

namespace npinv {

namespace {

void require_nonadapted_run(const AdaptationResult& adapted) {
    if (adapted.jet.empty())
        throw PreconditionError("operation requires a non-adapted input (nonempty root jet)");
    if (adapted.m < 2) throw InternalError("nonempty jet with leading exponent < 2");
}

Rational hl_formula(const Weight& kappa, int m) {
    return (Rational(1) + Rational(m) * kappa.kappa1 - kappa.kappa2) / kappa.modulus();
}

} // namespace

std::vector<EdgeInvariant> edge_invariants(const AdaptationResult& adapted) {
    require_nonadapted_run(adapted);
    NewtonPolyhedron np = build_polyhedron(adapted.adapted);
    std::vector<EdgeInvariant> out;
    for (const auto& e : edge_sequence(np)) {
        EdgeInvariant inv;
        inv.index = e.index;
        inv.kappa = e.kappa;
        inv.a = e.a;
        bool above_m = !e.a.has_value() || *e.a > adapted.m;
        if (above_m) inv.hl = hl_formula(e.kappa, adapted.m);
        out.push_back(inv);
    }
    return out;
}

AugmentedPolyhedron augmented_polyhedron(const AdaptationResult& adapted) {
    require_nonadapted_run(adapted);
    AugmentedPolyhedron out;
    out.base = build_polyhedron(adapted.adapted);

    AdaptednessVerdict lin = check_adapted(adapted.linearized);
    if (lin.principalFace.kind != FaceKind::CompactEdge || !lin.principalFace.weight)
        throw InternalError("linearly adapted polynomial lost its compact principal edge");
    out.principalLine = *lin.principalFace.weight;
    const Weight& L = out.principalLine;

    // L supports N(phi^a); the half-line ends at the touching vertex with the
    // smallest second coordinate
    std::size_t touch = out.base.vertices.size();
    for (std::size_t i = 0; i < out.base.vertices.size(); ++i) {
        const Monomial& v = out.base.vertices[i];
        Rational level = L.kappa1 * v.e1 + L.kappa2 * v.e2;
        if (level < 1)
            throw InternalError("principal line does not support N(phi^a)");
        if (level == 1) touch = i; // vertices are B-decreasing, keep the last hit
    }
    if (touch == out.base.vertices.size())
        throw InternalError("principal line does not touch N(phi^a)");
    const Monomial& tv = out.base.vertices[touch];
    out.halfLineEnd = {Rational(tv.e1), Rational(tv.e2)};

    // walk the boundary of N^r(phi^a) from L+ to the horizontal ray and
    // intersect with Delta^(m) = {t2 = t1 + m + 1}
    const int m = adapted.m;
    auto g_at = [&](const Monomial& v) { return Rational(v.e2 - v.e1 - (m + 1)); };
    auto intersect_line = [&](const Weight& w) -> Rational {
        // second coordinate of the crossing of Delta^(m) with w1 t1 + w2 t2 = 1
        return (Rational(1) + Rational(m + 1) * w.kappa1) / w.modulus();
    };

    Rational second;
    if (g_at(tv) <= 0) {
        second = intersect_line(L);
    } else {
        bool found = false;
        second = Rational(out.base.vertices.back().e2); // horizontal ray fallback
        for (std::size_t i = touch + 1; i < out.base.vertices.size(); ++i) {
            if (g_at(out.base.vertices[i]) <= 0) {
                Weight w = edge_weight(out.base.vertices[i - 1], out.base.vertices[i]);
                second = intersect_line(w);
                found = true;
                break;
            }
        }
        (void)found;
    }
    out.deltaIntersection = {second - (m + 1), second};
    out.rHeightGeometric = second - 1;
    return out;
}

Rational r_height(const AdaptationResult& adapted, const Rational& d) {
    require_nonadapted_run(adapted);
    Rational best = d;
    for (const auto& inv : edge_invariants(adapted))
        if (inv.hl && *inv.hl > best) best = *inv.hl;
    AugmentedPolyhedron aug = augmented_polyhedron(adapted);
    if (aug.rHeightGeometric != best)
        throw InternalError("r-height formula and augmented-polyhedron geometry disagree: " +
                            to_string(best) + " vs " + to_string(aug.rHeightGeometric));
    return best;
}

namespace {

SingularityClass classify_from(const AdaptationResult& adapted) {
    if (adapted.dLinear >= 2)
        throw PreconditionError("singularity classification requires d < 2 in linearly "
                                "adapted coordinates");
    SingularityClass out;
    const BivariatePolynomial& pa = adapted.adapted;

    BivariatePolynomial b0;
    BivariatePolynomial btilde;
    for (const auto& [mono, c] : pa.terms()) {
        if (mono.e2 == 0) {
            b0.add_term(mono, c);
        } else if (mono.e2 == 1) {
            return out; // no y2-linear part in the normal form
        } else {
            btilde.add_term({mono.e1, mono.e2 - 2}, c);
        }
    }
    if (btilde.is_zero()) return out;

    if (btilde.coefficient(0, 0) != 0) {
        if (b0.is_zero()) {
            out.tag = SingularityTag::Ainfinity;
            return out;
        }
        int n = INT_MAX;
        for (const auto& [mono, c] : b0.terms()) n = std::min(n, mono.e1);
        out.tag = SingularityTag::A;
        out.n = n;
        return out;
    }

    // D: btilde = y1 b1 + y2^2 b2 with b1(0,0) != 0
    if (btilde.coefficient(1, 0) != 0) {
        bool shape_ok = true;
        for (const auto& [mono, c] : btilde.terms())
            if (mono.e1 == 0 && mono.e2 < 2) shape_ok = false;
        if (shape_ok) out.tag = SingularityTag::D;
    }
    return out;
}

} // namespace

SingularityClass classify_singularity(const BivariatePolynomial& phi) {
    return classify_from(adapt_coordinates(phi));
}

ClusterIdentityReport verify_cluster_identities(const AdaptationResult& adapted) {
    ClusterIdentityReport report;
    const BivariatePolynomial& pa = adapted.adapted;
    NewtonPolyhedron np = build_polyhedron(pa);
    const auto& verts = np.vertices;
    long nu1 = verts.front().e1; // global trivial-root orders of phi^a
    long nu2 = verts.back().e2;

    struct EdgeFact {
        Rational a;
        long clusterSize;
    };
    std::vector<EdgeFact> facts;

    for (std::size_t l = 1; l < verts.size(); ++l) {
        Weight kappa = edge_weight(verts[l - 1], verts[l]);
        auto part = kappa_principal_part(pa, kappa);
        HomogeneousFactorization f = factorize_homogeneous(part, kappa);

        ClusterIdentityReport::EdgeCheck chk;
        chk.index = static_cast<int>(l);
        chk.A_prev = verts[l - 1].e1;
        chk.B_cur = verts[l].e2;
        chk.nu1 = f.nu1;
        chk.nu2 = f.nu2;
        long degW = 0;
        for (const auto& sf : f.factors)
            degW += static_cast<long>(sf.factor.degree()) * sf.multiplicity;
        chk.clusterSize = static_cast<long>(f.q) * degW;
        chk.pass = (chk.nu1 == chk.A_prev) && (chk.nu2 == chk.B_cur) &&
                   (chk.clusterSize == verts[l - 1].e2 - verts[l].e2);
        report.edges.push_back(chk);
        report.pass = report.pass && chk.pass;
        facts.push_back({kappa.kappa2 / kappa.kappa1, chk.clusterSize});
    }

    // reassembled vertex identities: A_{l-1} = nu1 + sum_{l1<l} |[l1]| a_{l1}
    // and B_l = nu2 + sum_{l1>l} |[l1]|
    for (std::size_t l = 1; l < verts.size(); ++l) {
        Rational lhsA(verts[l - 1].e1);
        Rational sumA(nu1);
        for (std::size_t l1 = 0; l1 + 1 < l; ++l1)
            sumA += Rational(facts[l1].clusterSize) * facts[l1].a;
        Rational lhsB(verts[l].e2);
        Rational sumB(nu2);
        for (std::size_t l1 = l; l1 < facts.size(); ++l1)
            sumB += Rational(facts[l1].clusterSize);
        if (lhsA != sumA || lhsB != sumB) report.pass = false;
    }

    if (!report.pass)
        throw InternalError("Puiseux cluster/vertex identities failed on N(phi^a)");
    return report;
}

InvariantReport critical_exponents(const BivariatePolynomial& phi) {
    InvariantReport rep;
    rep.input = phi;
    rep.adaptation = adapt_coordinates(phi);
    HeightData hd = height(rep.adaptation);

    rep.d = rep.adaptation.dOriginal;
    rep.dLinear = rep.adaptation.dLinear;
    rep.h = hd.h;
    rep.nu = hd.nu;
    rep.m = rep.adaptation.m;
    rep.swapped = rep.adaptation.swapped;
    rep.linearlyAdaptable = rep.adaptation.linearly_adaptable();

    if (!rep.linearlyAdaptable) {
        rep.edgeInvariants = edge_invariants(rep.adaptation);
        rep.hR = r_height(rep.adaptation, rep.dLinear);
        rep.restrictionPcPrime = 2 * *rep.hR + 2;
    } else {
        rep.restrictionPcPrime = 2 * rep.h + 2;
    }

    rep.decayRate = Rational(1) / rep.h;
    rep.logExponent = rep.nu;
    rep.maximalRange.greaterThan = std::max(rep.h, Rational(2));
    rep.contactIndex = Rational(1) / rep.h;

    if (rep.dLinear < 2) rep.singularityClass = classify_from(rep.adaptation);
    return rep;
}

} // namespace npinv
