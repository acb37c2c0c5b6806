#include "npinv/homog.hpp"

#include <algorithm>
#include <climits>

namespace npinv {

bool is_kappa_homogeneous(const BivariatePolynomial& P, const Weight& kappa) {
    if (P.is_zero()) return false;
    for (const auto& [m, c] : P.terms())
        if (kappa.kappa1 * m.e1 + kappa.kappa2 * m.e2 != 1) return false;
    return true;
}

BivariatePolynomial HomogeneousFactorization::expand() const {
    BivariatePolynomial prod = BivariatePolynomial::monomial(constant, nu1, nu2);
    for (const auto& f : factors) {
        // homogenize the factor g(z): sum_j b_j z^j with z = x2^q / x1^p
        // becomes sum_j b_j x2^{q j} x1^{p (deg - j)}
        int deg = f.factor.degree();
        BivariatePolynomial g;
        for (int j = 0; j <= deg; ++j) {
            const Rational& b = f.factor.coeffs()[static_cast<std::size_t>(j)];
            if (b != 0) g.add_term({p * (deg - j), q * j}, b);
        }
        prod = prod * g.pow(f.multiplicity);
    }
    return prod;
}

HomogeneousFactorization factorize_homogeneous(const BivariatePolynomial& P,
                                               const Weight& kappa) {
    if (kappa.kappa1 <= 0 || kappa.kappa2 <= 0)
        throw PreconditionError("factorization requires kappa1, kappa2 > 0");
    if (!is_kappa_homogeneous(P, kappa))
        throw PreconditionError("polynomial is not kappa-homogeneous of degree 1");

    HomogeneousFactorization out;
    Rational ratio = kappa.kappa2 / kappa.kappa1; // p/q
    out.p = static_cast<int>(ratio.get_num().get_si());
    out.q = static_cast<int>(ratio.get_den().get_si());

    int nu1 = INT_MAX, nu2 = INT_MAX;
    for (const auto& [m, c] : P.terms()) {
        nu1 = std::min(nu1, m.e1);
        nu2 = std::min(nu2, m.e2);
    }
    out.nu1 = nu1;
    out.nu2 = nu2;

    // R = P / (x1^nu1 x2^nu2) has support {(p*j, q*(M-j))}; read off the
    // root polynomial W(z) = sum_j c_j z^{M-j} in z = x2^q / x1^p.
    int max_e2 = 0;
    for (const auto& [m, c] : P.terms()) max_e2 = std::max(max_e2, m.e2 - nu2);
    if (max_e2 % out.q != 0)
        throw InternalError("inconsistent homogeneous support");
    int M = max_e2 / out.q;

    std::vector<Rational> w(static_cast<std::size_t>(M) + 1, Rational(0));
    for (const auto& [m, c] : P.terms()) {
        int e1 = m.e1 - nu1, e2 = m.e2 - nu2;
        if (e1 % out.p != 0)
            throw InternalError("inconsistent homogeneous support");
        int j = e1 / out.p;
        if (e2 != out.q * (M - j))
            throw InternalError("inconsistent homogeneous support");
        w[static_cast<std::size_t>(M - j)] = c;
    }
    UPoly W{w};
    if (W.is_zero()) throw InternalError("empty root polynomial");

    out.constant = W.leading();
    if (W.degree() == 0) return out; // pure monomial

    SquareFreeDecomposition sf = squarefree_decomposition(W);
    out.factors = sf.factors;

    for (const auto& f : sf.factors) {
        auto intervals = isolate_real_roots(f.factor);
        for (const auto& iv : intervals) {
            HomogRoot r;
            r.multiplicity = f.multiplicity;
            r.real = true;
            r.exact = rational_root_in(f.factor, iv);
            if (!r.exact) r.interval = iv;
            out.roots.push_back(r);
        }
        int complex_count = f.factor.degree() - static_cast<int>(intervals.size());
        if (complex_count > 0) {
            if (complex_count % 2 != 0)
                throw InternalError("odd number of non-real roots");
            HomogRoot r;
            r.multiplicity = f.multiplicity;
            r.real = false;
            r.conjugatePairs = complex_count / 2;
            out.roots.push_back(r);
        }
    }
    return out;
}

namespace {

// Does the real root lambda of (x2^q - lambda x1^p) meet the unit circle at a
// point with x1 != 0?
bool produces_circle_zero(bool lambda_positive, int p, int q) {
    if (q % 2 == 1) return true;
    if (lambda_positive) return true;
    return p % 2 == 1; // lambda < 0 reachable via x1 < 0
}

} // namespace

int circle_order(const BivariatePolynomial& P, const Weight& kappa) {
    HomogeneousFactorization f = factorize_homogeneous(P, kappa);
    int best = std::max(f.nu1, f.nu2);
    for (const auto& r : f.roots) {
        if (!r.real) continue;
        // isolating intervals never straddle 0, so the upper endpoint fixes
        // the sign of an irrational root
        bool positive = r.exact ? (*r.exact > 0) : (r.interval->second > 0);
        if (produces_circle_zero(positive, f.p, f.q))
            best = std::max(best, r.multiplicity);
    }
    return best;
}

Rational homogeneous_height(const BivariatePolynomial& P, const Weight& kappa) {
    Rational dh = Rational(1) / kappa.modulus();
    Rational m(circle_order(P, kappa));
    return std::max(dh, m);
}

} // namespace npinv
