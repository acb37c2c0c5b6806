#ifndef NPINV_HOMOG_HPP
#define NPINV_HOMOG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "npinv/newton.hpp"
#include "npinv/polynomial.hpp"
#include "npinv/upoly.hpp"

namespace npinv {

// One root class lambda of the factorization (2.4)-style product
// (x2^q - lambda x1^p)^multiplicity.  Real roots carry either an exact
// rational value or an isolating interval; a non-real entry stands for a
// conjugate pair.
struct HomogRoot {
    int multiplicity = 1;
    bool real = true;
    std::optional<Rational> exact;
    std::optional<std::pair<Rational, Rational>> interval;
    int conjugatePairs = 0; // set for non-real entries
};

// P = constant * x1^nu1 * x2^nu2 * prod_i factor_i(x2^q/x1^p)^mult_i where
// the stored monic squarefree factors make the reconstruction exact even
// when individual roots are irrational.
struct HomogeneousFactorization {
    Rational constant;
    int nu1 = 0, nu2 = 0;
    int p = 1, q = 1; // coprime, p/q = kappa2/kappa1
    std::vector<SquareFreeFactor> factors; // in the root variable z = x2^q/x1^p
    std::vector<HomogRoot> roots;

    // Exact re-expansion of the factorized form.
    BivariatePolynomial expand() const;
};

// Requires P kappa-homogeneous of degree 1 and kappa1 > 0.
HomogeneousFactorization factorize_homogeneous(const BivariatePolynomial& P,
                                               const Weight& kappa);

// Maximal order of vanishing of P along the unit circle: the larger of the
// axis orders nu1, nu2 and the multiplicities of real roots that produce a
// real circle zero (q odd: always; q even: lambda > 0, or lambda < 0 with
// p odd via x1 < 0).
int circle_order(const BivariatePolynomial& P, const Weight& kappa);

// h(P) = max{m(P), 1/|kappa|}.
Rational homogeneous_height(const BivariatePolynomial& P, const Weight& kappa);

// True when P is kappa-homogeneous of degree 1.
bool is_kappa_homogeneous(const BivariatePolynomial& P, const Weight& kappa);

} // namespace npinv

#endif
