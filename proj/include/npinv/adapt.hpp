#ifndef NPINV_ADAPT_HPP
#define NPINV_ADAPT_HPP

#include <optional>
#include <vector>

#include "npinv/homog.hpp"
#include "npinv/newton.hpp"
#include "npinv/polynomial.hpp"

namespace npinv {

enum class AdaptCondition { A, B, C, None };

// Outcome of the adaptedness criterion: condition (a) compact principal edge
// with m(phi_pr) <= d, (b) vertex, (c) unbounded edge.
struct AdaptednessVerdict {
    bool adapted = false;
    AdaptCondition condition = AdaptCondition::None;
    Face principalFace;
    Rational distance;
    std::optional<int> circleOrder; // filled when the principal face is a compact edge
};

struct AdaptStep {
    Rational b;
    int exponent;
    Rational distanceAfter;
};

// Principal root jet accumulated by the algorithm: psi(x1) = sum b_l x1^{m_l}
// with strictly increasing exponents >= 2 (the degree-1 part is kept apart
// as the linear shear).
struct RootJet {
    std::vector<JetTerm> terms;
    int leading_exponent() const { return terms.empty() ? 0 : terms.front().exponent; }
    bool empty() const { return terms.empty(); }
};

struct AdaptationResult {
    bool originalAdapted = false;
    bool swapped = false;                 // x1 <-> x2 applied before any shear
    std::optional<JetTerm> linearShear;   // composed exponent-1 shear
    RootJet jet;
    BivariatePolynomial linearized;       // phi after swap and linear shear
    BivariatePolynomial adapted;          // phi^a
    Rational dOriginal;
    Rational dLinear;                     // distance of `linearized`
    int m = 0;                            // leading jet exponent, 0 when jet empty
    std::vector<AdaptStep> stepLog;

    bool linearly_adaptable() const { return jet.empty(); }
};

struct HeightData {
    Rational h;
    int nu = 0; // Varchenko's exponent
    Rational dOriginal;
};

// Requires phi of finite type at the origin (phi(0)=0, grad phi(0)=0).
AdaptednessVerdict check_adapted(const BivariatePolynomial& phi);

// Applies degree-1 shears (and at most one initial coordinate swap) until the
// polynomial is adapted or has integer m = kappa2/kappa1 >= 2.  Returns the
// transformed polynomial, the composed shear, and the swap flag.
struct LinearAdaptation {
    BivariatePolynomial poly;
    std::optional<JetTerm> shear;
    bool swapped = false;
};
LinearAdaptation linearly_adapt(const BivariatePolynomial& phi, int maxSteps = 64);

// One step of Varchenko's algorithm.  Requires: not adapted, m integer >= 2.
// The shear coefficient is the unique real root of phi_pr of multiplicity
// greater than d; it must be rational for the exact pipeline.
std::pair<JetTerm, BivariatePolynomial> varchenko_step(const BivariatePolynomial& phi);

AdaptationResult adapt_coordinates(const BivariatePolynomial& phi, int maxSteps = 64);

HeightData height(const BivariatePolynomial& phi);
HeightData height(const AdaptationResult& adapted);

} // namespace npinv

#endif
