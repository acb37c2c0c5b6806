#ifndef NPINV_UPOLY_HPP
#define NPINV_UPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "npinv/rational.hpp"

namespace npinv {

// Dense univariate polynomial over Q; coeffs[k] multiplies z^k, leading
// coefficient nonzero (empty vector = zero polynomial).
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly constant(const Rational& c);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& leading() const { return coeffs_.back(); }

    Rational eval(const Rational& z) const;

    UPoly derivative() const;
    UPoly monic() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rational& c) const;
    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }

    // Exact Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Monic gcd via the Euclidean algorithm over Q.
UPoly upoly_gcd(UPoly a, UPoly b);

// Yun's algorithm: p = constant * prod_i factor_i ^ multiplicity_i with the
// factors monic, squarefree and pairwise coprime.
struct SquareFreeFactor {
    UPoly factor;
    int multiplicity;
};
struct SquareFreeDecomposition {
    Rational constant;
    std::vector<SquareFreeFactor> factors;
};
SquareFreeDecomposition squarefree_decomposition(const UPoly& p);

// Count of distinct real roots of a squarefree p in the open interval
// (lo, hi); endpoints must not be roots.
int sturm_count(const UPoly& p, const Rational& lo, const Rational& hi);

// Disjoint isolating intervals (lo, hi) for the distinct real roots of a
// squarefree p, refined to width <= 2^-32, sorted increasingly.  Intervals
// never straddle a nonzero rational of interest: each contains exactly one
// root and excludes 0 unless the root is 0 itself.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p);

// Number of distinct real roots of a squarefree p.
int count_real_roots(const UPoly& p);

// The rational root of a squarefree p inside the isolating interval, if the
// isolated root is rational.  Exact: uses the integer-root transform, so no
// big-integer factoring is involved.
std::optional<Rational> rational_root_in(const UPoly& p,
                                         std::pair<Rational, Rational> interval);

} // namespace npinv

#endif
