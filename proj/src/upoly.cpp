#include "npinv/upoly.hpp"

#include <algorithm>

#include "npinv/errors.hpp"

namespace npinv {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UPoly UPoly::constant(const Rational& c) {
    UPoly p;
    if (c != 0) p.coeffs_ = {c};
    return p;
}

void UPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::eval(const Rational& z) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) r[k] += o.coeffs_[k];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) r[k] -= o.coeffs_[k];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rational& c) const {
    if (c == 0) return {};
    std::vector<Rational> r = coeffs_;
    for (auto& x : r) x *= c;
    return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rational> rem = coeffs_;
    int dd = d.degree();
    int dq = static_cast<int>(rem.size()) - 1 - dd;
    if (dq < 0) return {UPoly(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1, Rational(0));
    for (int k = dq; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + dd)] / d.leading();
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * d.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

SquareFreeDecomposition squarefree_decomposition(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    SquareFreeDecomposition out;
    out.constant = p.leading();
    if (p.degree() == 0) return out;

    UPoly pm = p.monic();
    UPoly dp = pm.derivative();
    UPoly g = upoly_gcd(pm, dp);
    UPoly w = pm.divmod(g).first;
    UPoly y = dp.divmod(g).first;
    int i = 1;
    while (w.degree() > 0) {
        UPoly z = y - w.derivative();
        UPoly a = upoly_gcd(w, z);
        if (a.degree() > 0) out.factors.push_back({a, i});
        w = w.divmod(a).first;
        y = z.divmod(a).first;
        ++i;
        if (i > 512) throw InternalError("squarefree decomposition did not terminate");
    }
    return out;
}

namespace {

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        const UPoly& a = chain[chain.size() - 2];
        const UPoly& b = chain.back();
        UPoly r = a.divmod(b).second;
        chain.push_back(r * Rational(-1));
    }
    chain.pop_back();
    return chain;
}

int sign_changes_at(const std::vector<UPoly>& chain, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& q : chain) {
        int s = sign(q.eval(x));
        if (s != 0) {
            if (last != 0 && s != last) ++changes;
            last = s;
        }
    }
    return changes;
}

// Cauchy bound: all real roots lie in (-B, B).
Rational root_bound(const UPoly& p) {
    Rational m(0);
    for (const auto& c : p.coeffs()) {
        Rational a = abs(c / p.leading());
        if (a > m) m = a;
    }
    return m + 1;
}

} // namespace

int sturm_count(const UPoly& p, const Rational& lo, const Rational& hi) {
    if (p.degree() <= 0) return 0;
    auto chain = sturm_chain(p);
    return sign_changes_at(chain, lo) - sign_changes_at(chain, hi);
}

int count_real_roots(const UPoly& p) {
    if (p.degree() <= 0) return 0;
    Rational b = root_bound(p);
    Rational lo = -b, hi = b;
    // the bound is strict, endpoints are not roots
    return sturm_count(p, lo, hi);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p) {
    std::vector<std::pair<Rational, Rational>> out;
    if (p.degree() <= 0) return out;
    auto chain = sturm_chain(p);
    auto count = [&](const Rational& lo, const Rational& hi) {
        return sign_changes_at(chain, lo) - sign_changes_at(chain, hi);
    };

    Rational b = root_bound(p);
    const Rational width_target = make_rational(1, 1) / rational_pow(Rational(2), 32);

    struct Seg { Rational lo, hi; int n; };
    std::vector<Seg> work;
    int total = count(-b, b);
    if (total > 0) work.push_back({-b, b, total});

    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.n == 1 && s.hi - s.lo <= width_target &&
            sign(p.eval(s.lo)) != 0 && sign(p.eval(s.hi)) != 0 &&
            !(s.lo < 0 && s.hi > 0)) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (sign(p.eval(mid)) == 0) {
            // nudge the split point off the root
            mid = (s.lo + mid) / 2;
            while (sign(p.eval(mid)) == 0) mid = (s.lo + mid) / 2;
        }
        int nl = count(s.lo, mid);
        int nr = s.n - nl;
        if (nl > 0) work.push_back({s.lo, mid, nl});
        if (nr > 0) work.push_back({mid, s.hi, nr});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b2) { return a.first < b2.first; });
    return out;
}

std::optional<Rational> rational_root_in(const UPoly& p,
                                         std::pair<Rational, Rational> interval) {
    if (p.degree() < 1) return std::nullopt;
    if (p.degree() == 1) {
        Rational r = -p.coeffs()[0] / p.coeffs()[1];
        if (r > interval.first && r < interval.second) return r;
        return std::nullopt;
    }

    // Clear denominators to get integer coefficients a_k, then substitute
    // w = a_n * z: a rational root z must give an integer w.  Refine the
    // isolating interval until it contains at most one integer w candidate.
    Integer lcm(1);
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> a(p.coeffs().size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        Rational scaled = p.coeffs()[k] * lcm;
        a[k] = scaled.get_num();
    }
    Integer an = a.back();

    Rational lo = interval.first, hi = interval.second;
    Rational vlo = p.eval(lo);
    if (vlo == 0) return lo;
    if (p.eval(hi) == 0) return hi;
    // an isolating interval of a squarefree polynomial brackets its simple
    // root, so bisection by sign applies
    int slo = vlo > 0 ? 1 : -1;
    while ((hi - lo) * abs(an) >= 1) {
        Rational mid = (lo + hi) / 2;
        Rational v = p.eval(mid);
        if (v == 0) return mid;
        if ((v > 0 ? 1 : -1) == slo) lo = mid;
        else hi = mid;
    }
    // at most one integer w in (an*lo, an*hi) up to orientation
    Rational wlo = lo * an, whi = hi * an;
    if (wlo > whi) std::swap(wlo, whi);
    Integer wfloor;
    mpz_fdiv_q(wfloor.get_mpz_t(), whi.get_num_mpz_t(), whi.get_den_mpz_t());
    for (Integer w = wfloor; Rational(w) > wlo; w -= 1) {
        Rational z = make_rational(w, an);
        if (p.eval(z) == 0 && z > interval.first && z < interval.second) return z;
    }
    return std::nullopt;
}

} // namespace npinv
