#ifndef NPINV_POLYNOMIAL_HPP
#define NPINV_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "npinv/errors.hpp"
#include "npinv/rational.hpp"

namespace npinv {

// Exponent pair (alpha1, alpha2) of a term of the Taylor support.
struct Monomial {
    int e1 = 0;
    int e2 = 0;
    auto operator<=>(const Monomial&) const = default;
    int total_degree() const { return e1 + e2; }
};

// One term b * x1^m of a shear y2 := x2 - psi(x1).
struct JetTerm {
    Rational coefficient; // nonzero
    int exponent = 1;     // >= 1
};

// Total-degree cap applied by expanding operations (default 64).  Shears can
// inflate degree quadratically, so verification-scale runs may raise it.
int degree_guard();
void set_degree_guard(int guard);

// Bivariate polynomial with exact rational coefficients.  Canonical: the term
// map holds no zero coefficients and is ordered lexicographically by (e1,e2).
class BivariatePolynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    BivariatePolynomial() = default;
    explicit BivariatePolynomial(const Rational& constant);
    static BivariatePolynomial monomial(const Rational& coeff, int e1, int e2);
    static BivariatePolynomial variable1();
    static BivariatePolynomial variable2();

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for the zero polynomial
    Rational coefficient(int e1, int e2) const;
    std::vector<Monomial> support() const;

    void add_term(const Monomial& m, const Rational& c);

    BivariatePolynomial operator-() const;
    BivariatePolynomial operator+(const BivariatePolynomial& o) const;
    BivariatePolynomial operator-(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const Rational& c) const;
    bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }

    BivariatePolynomial pow(int e) const;

    // x1 <-> x2
    BivariatePolynomial transpose() const;

    // Canonical text form; parse(print(p)) == p.
    std::string print() const;

  private:
    TermMap terms_;
};

BivariatePolynomial parse_polynomial(const std::string& text);

// phi(y1, y2 + sum_l b_l y1^{m_l}); jet exponents must be strictly increasing.
BivariatePolynomial shear_substitute(const BivariatePolynomial& phi,
                                     const std::vector<JetTerm>& jet);

BivariatePolynomial partial_derivative(const BivariatePolynomial& phi,
                                       int order1, int order2);

// phi(a*x1 + b*x2, c*x1 + d*x2); requires ad - bc != 0.
BivariatePolynomial linear_substitute(const BivariatePolynomial& phi,
                                      const Rational& a, const Rational& b,
                                      const Rational& c, const Rational& d);

double evaluate(const BivariatePolynomial& phi, double x1, double x2);
Rational evaluate_exact(const BivariatePolynomial& phi,
                        const Rational& x1, const Rational& x2);

// True when the polynomial vanishes to order >= 2 at the origin (no constant
// or linear part) and is nonzero.
bool is_finite_type_at_origin(const BivariatePolynomial& phi);

} // namespace npinv

#endif
