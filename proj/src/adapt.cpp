#include "npinv/adapt.hpp"

namespace npinv {

namespace {

void require_finite_type(const BivariatePolynomial& phi) {
    if (phi.is_zero()) throw PreconditionError("zero phase polynomial");
    if (!is_finite_type_at_origin(phi))
        throw PreconditionError(
            "phase must vanish to second order at the origin (no constant or linear part)");
}

// The unique real root class of multiplicity > d of the principal part; the
// exactness contract requires it to be rational.
Rational principal_root(const BivariatePolynomial& phi_pr, const Weight& kappa,
                        const Rational& d) {
    HomogeneousFactorization f = factorize_homogeneous(phi_pr, kappa);
    const HomogRoot* found = nullptr;
    for (const auto& r : f.roots) {
        if (!r.real || Rational(r.multiplicity) <= d) continue;
        if (found) throw InternalError("multiple real roots of multiplicity > d");
        found = &r;
    }
    if (!found)
        throw InternalError("no real root of multiplicity > d in a non-adapted principal part");
    if (!found->exact)
        throw IrrationalRootError(
            "principal root is irrational; the exact pipeline requires rational jets");
    return *found->exact;
}

} // namespace

AdaptednessVerdict check_adapted(const BivariatePolynomial& phi) {
    require_finite_type(phi);
    AdaptednessVerdict v;
    NewtonPolyhedron np = build_polyhedron(phi);
    v.distance = newton_distance(np);
    v.principalFace = principal_face(np);
    switch (v.principalFace.kind) {
        case FaceKind::Vertex:
            v.adapted = true;
            v.condition = AdaptCondition::B;
            break;
        case FaceKind::UnboundedHorizontal:
        case FaceKind::UnboundedVertical:
            v.adapted = true;
            v.condition = AdaptCondition::C;
            break;
        case FaceKind::CompactEdge: {
            auto part = kappa_principal_part(phi, *v.principalFace.weight);
            v.circleOrder = circle_order(part, *v.principalFace.weight);
            if (Rational(*v.circleOrder) <= v.distance) {
                v.adapted = true;
                v.condition = AdaptCondition::A;
            }
            break;
        }
    }
    return v;
}

LinearAdaptation linearly_adapt(const BivariatePolynomial& phi, int maxSteps) {
    require_finite_type(phi);
    LinearAdaptation out;
    out.poly = phi;

    AdaptednessVerdict v = check_adapted(out.poly);
    if (!v.adapted && v.principalFace.weight &&
        v.principalFace.weight->kappa1 > v.principalFace.weight->kappa2) {
        out.poly = out.poly.transpose();
        out.swapped = true;
        v = check_adapted(out.poly);
        if (v.adapted) throw InternalError("adaptedness changed under coordinate swap");
    }

    Rational shear_total(0);
    int steps = 0;
    while (!v.adapted) {
        const Weight& kappa = *v.principalFace.weight;
        Rational m = kappa.kappa2 / kappa.kappa1;
        if (m != 1) break;
        if (++steps > maxSteps) throw BudgetError("linear adaptation exceeded the step cap");
        Rational d = v.distance;
        auto part = kappa_principal_part(out.poly, kappa);
        Rational b = principal_root(part, kappa, d);
        out.poly = shear_substitute(out.poly, {{b, 1}});
        shear_total += b;
        AdaptednessVerdict next = check_adapted(out.poly);
        if (next.distance <= d) throw InternalError("distance did not increase under linear shear");
        v = next;
        if (!v.adapted && v.principalFace.weight &&
            v.principalFace.weight->kappa1 > v.principalFace.weight->kappa2)
            throw InternalError("principal weight lost the kappa1 <= kappa2 convention mid-run");
    }

    if (!v.adapted) {
        const Weight& kappa = *v.principalFace.weight;
        Rational m = kappa.kappa2 / kappa.kappa1;
        if (!is_integer(m) || m < 2)
            throw InternalError("not-adapted polynomial with non-integer m survived the criterion");
    }
    if (shear_total != 0) out.shear = JetTerm{shear_total, 1};
    return out;
}

std::pair<JetTerm, BivariatePolynomial> varchenko_step(const BivariatePolynomial& phi) {
    AdaptednessVerdict v = check_adapted(phi);
    if (v.adapted) throw PreconditionError("varchenko_step requires a non-adapted polynomial");
    const Weight& kappa = *v.principalFace.weight;
    Rational mr = kappa.kappa2 / kappa.kappa1;
    if (!is_integer(mr) || mr < 2)
        throw PreconditionError("varchenko_step requires integer m = kappa2/kappa1 >= 2");
    int m = static_cast<int>(to_long(mr));

    auto part = kappa_principal_part(phi, kappa);
    Rational b = principal_root(part, kappa, v.distance);
    JetTerm term{b, m};
    BivariatePolynomial next = shear_substitute(phi, {term});
    Rational dNext = newton_distance(build_polyhedron(next));
    if (dNext <= v.distance) throw InternalError("distance did not increase in Varchenko step");
    return {term, next};
}

namespace {

AdaptationResult adapt_oriented(const BivariatePolynomial& phi, bool preSwapped,
                                int maxSteps) {
    AdaptationResult out;
    out.dOriginal = newton_distance(build_polyhedron(phi));
    out.originalAdapted = check_adapted(phi).adapted;

    LinearAdaptation lin = linearly_adapt(phi, maxSteps);
    out.swapped = preSwapped != lin.swapped;
    out.linearShear = lin.shear;
    out.linearized = lin.poly;
    out.dLinear = newton_distance(build_polyhedron(lin.poly));
    if (lin.shear) out.stepLog.push_back({lin.shear->coefficient, 1, out.dLinear});

    BivariatePolynomial cur = lin.poly;
    AdaptednessVerdict v = check_adapted(cur);
    int steps = 0;
    while (!v.adapted) {
        if (++steps > maxSteps)
            throw BudgetError("Varchenko's algorithm exceeded the step cap of " +
                              std::to_string(maxSteps) + " steps");
        auto [term, next] = varchenko_step(cur);
        if (!out.jet.terms.empty() && term.exponent <= out.jet.terms.back().exponent)
            throw InternalError("jet exponents failed to increase");
        cur = next;
        v = check_adapted(cur);
        out.jet.terms.push_back(term);
        out.stepLog.push_back({term.coefficient, term.exponent, v.distance});
    }
    out.adapted = cur;
    out.m = out.jet.leading_exponent();
    return out;
}

} // namespace

AdaptationResult adapt_coordinates(const BivariatePolynomial& phi, int maxSteps) {
    require_finite_type(phi);
    // The root curve may be polynomial in only one of the two shear
    // orientations (the other sees an infinite analytic jet, e.g. when a
    // quadratic in x2 must be inverted).  Retry transposed before giving up.
    try {
        return adapt_oriented(phi, false, maxSteps);
    } catch (const IrrationalRootError&) {
        return adapt_oriented(phi.transpose(), true, maxSteps);
    } catch (const BudgetError&) {
        return adapt_oriented(phi.transpose(), true, maxSteps);
    }
}

HeightData height(const AdaptationResult& adapted) {
    HeightData out;
    out.dOriginal = adapted.dOriginal;
    AdaptednessVerdict v = check_adapted(adapted.adapted);
    out.h = v.distance;
    out.nu = 0;
    if (out.h < 2) return out;

    if (v.principalFace.kind == FaceKind::Vertex) {
        out.nu = 1;
        return out;
    }
    if (v.principalFace.kind == FaceKind::CompactEdge &&
        Rational(*v.circleOrder) == v.distance) {
        // principal face equivalent to a vertex: one extra Varchenko-type step
        // (shear by a maximal-multiplicity real root) must expose the vertex
        out.nu = 1;
        BivariatePolynomial base = adapted.adapted;
        Weight kappa = *v.principalFace.weight;
        if (kappa.kappa1 > kappa.kappa2) {
            base = base.transpose();
            std::swap(kappa.kappa1, kappa.kappa2);
        }
        Rational ratio = kappa.kappa2 / kappa.kappa1;
        if (!is_integer(ratio)) return out; // Corollary: equality forces integer a
        auto part = kappa_principal_part(base, kappa);
        HomogeneousFactorization f = factorize_homogeneous(part, kappa);
        bool had_rational_candidate = false;
        for (const auto& r : f.roots) {
            if (!r.real || !r.exact || Rational(r.multiplicity) != v.distance) continue;
            had_rational_candidate = true;
            BivariatePolynomial moved =
                shear_substitute(base, {{*r.exact, static_cast<int>(to_long(ratio))}});
            AdaptednessVerdict w = check_adapted(moved);
            if (w.principalFace.kind == FaceKind::Vertex && w.distance == out.h) return out;
        }
        if (had_rational_candidate)
            throw InternalError("edge-equality case did not reach a vertex principal face");
    }
    return out;
}

HeightData height(const BivariatePolynomial& phi) { return height(adapt_coordinates(phi)); }

} // namespace npinv
