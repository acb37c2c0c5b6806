#include "npinv/polynomial.hpp"

#include <atomic>
#include <cctype>
#include <sstream>

namespace npinv {

namespace {
std::atomic<int> g_degree_guard{64};
}

int degree_guard() { return g_degree_guard.load(std::memory_order_relaxed); }

void set_degree_guard(int guard) {
    if (guard < 1) throw std::invalid_argument("degree guard must be positive");
    g_degree_guard.store(guard, std::memory_order_relaxed);
}

static void check_degree(int deg) {
    if (deg > degree_guard())
        throw BudgetError("total degree " + std::to_string(deg) +
                          " exceeds the degree guard " + std::to_string(degree_guard()));
}

BivariatePolynomial::BivariatePolynomial(const Rational& constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
}

BivariatePolynomial BivariatePolynomial::monomial(const Rational& coeff, int e1, int e2) {
    if (e1 < 0 || e2 < 0) throw std::invalid_argument("negative exponent");
    BivariatePolynomial p;
    if (coeff != 0) p.terms_[{e1, e2}] = coeff;
    return p;
}

BivariatePolynomial BivariatePolynomial::variable1() { return monomial(1, 1, 0); }
BivariatePolynomial BivariatePolynomial::variable2() { return monomial(1, 0, 1); }

int BivariatePolynomial::total_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
    return deg;
}

Rational BivariatePolynomial::coefficient(int e1, int e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Monomial> BivariatePolynomial::support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
}

void BivariatePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    check_degree(total_degree() + o.total_degree());
    BivariatePolynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term({ma.e1 + mb.e1, ma.e2 + mb.e2}, ca * cb);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const Rational& c) const {
    BivariatePolynomial r;
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
    return r;
}

BivariatePolynomial BivariatePolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    BivariatePolynomial r(Rational(1));
    BivariatePolynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

BivariatePolynomial BivariatePolynomial::transpose() const {
    BivariatePolynomial r;
    for (const auto& [m, c] : terms_) r.terms_[{m.e2, m.e1}] = c;
    return r;
}

std::string BivariatePolynomial::print() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool constant = (m.e1 == 0 && m.e2 == 0);
        bool wrote_coeff = false;
        if (a != 1 || constant) {
            out << to_string(a);
            wrote_coeff = true;
        }
        auto put_var = [&](const char* name, int e) {
            if (e == 0) return;
            if (wrote_coeff) out << "*";
            out << name;
            if (e > 1) out << "^" << e;
            wrote_coeff = true;
        };
        put_var("x1", m.e1);
        put_var("x2", m.e2);
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parser.  Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | var | '(' expr ')' | '-' factor
//   var    := 'x1' | 'x2' | 'x' | 'y'
//   rational := uint ('/' posint)?

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    BivariatePolynomial run() {
        BivariatePolynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    BivariatePolynomial expr() {
        BivariatePolynomial p = term();
        for (;;) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }

    BivariatePolynomial term() {
        BivariatePolynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    BivariatePolynomial factor() {
        BivariatePolynomial b = base();
        if (eat('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                throw ParseError("negative exponent", pos_);
            return b.pow(static_cast<int>(uinteger("exponent")));
        }
        return b;
    }

    BivariatePolynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            BivariatePolynomial p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    unsigned long uinteger(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(std::string("expected ") + what, pos_);
        unsigned long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + static_cast<unsigned long>(text_[i] - '0');
            if (v > 1000000ul) throw ParseError("integer literal too large", start);
        }
        return v;
    }

    BivariatePolynomial rational_literal() {
        std::size_t start = pos_;
        Integer num = digits();
        if (pos_ < text_.size() && text_[pos_] == '.')
            throw ParseError("non-rational literal; use p/q form", pos_);
        Rational q(num);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected positive denominator", pos_);
            Integer den = digits();
            if (den == 0) throw ParseError("zero denominator", start);
            q = make_rational(num, den);
        }
        return BivariatePolynomial(q);
    }

    Integer digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Integer(text_.substr(start, pos_ - start));
    }

    BivariatePolynomial variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "x1" || name == "x") return BivariatePolynomial::variable1();
        if (name == "x2" || name == "y") return BivariatePolynomial::variable2();
        throw ParseError("unknown identifier '" + name + "'", start);
    }
};

} // namespace

BivariatePolynomial parse_polynomial(const std::string& text) {
    Parser p(text);
    return p.run();
}

BivariatePolynomial shear_substitute(const BivariatePolynomial& phi,
                                     const std::vector<JetTerm>& jet) {
    for (std::size_t i = 0; i < jet.size(); ++i) {
        if (jet[i].coefficient == 0) throw PreconditionError("jet term with zero coefficient");
        if (jet[i].exponent < 1) throw PreconditionError("jet exponent must be >= 1");
        if (i > 0 && jet[i].exponent <= jet[i - 1].exponent)
            throw PreconditionError("jet exponents must be strictly increasing");
    }
    if (jet.empty() || phi.is_zero()) return phi;

    BivariatePolynomial psi;
    for (const auto& t : jet) psi.add_term({t.exponent, 0}, t.coefficient);

    int max_e2 = 0;
    for (const auto& [m, c] : phi.terms()) max_e2 = std::max(max_e2, m.e2);

    // Powers of (x2 + psi(x1)).
    std::vector<BivariatePolynomial> p2(static_cast<std::size_t>(max_e2) + 1);
    p2[0] = BivariatePolynomial(Rational(1));
    BivariatePolynomial x2psi = BivariatePolynomial::variable2() + psi;
    for (int k = 1; k <= max_e2; ++k) p2[static_cast<std::size_t>(k)] =
        p2[static_cast<std::size_t>(k - 1)] * x2psi;

    BivariatePolynomial result;
    for (const auto& [m, c] : phi.terms()) {
        BivariatePolynomial term =
            p2[static_cast<std::size_t>(m.e2)] * BivariatePolynomial::monomial(c, m.e1, 0);
        result = result + term;
    }
    return result;
}

BivariatePolynomial partial_derivative(const BivariatePolynomial& phi,
                                       int order1, int order2) {
    if (order1 < 0 || order2 < 0) throw std::invalid_argument("negative derivative order");
    BivariatePolynomial r = phi;
    for (int k = 0; k < order1; ++k) {
        BivariatePolynomial d;
        for (const auto& [m, c] : r.terms())
            if (m.e1 > 0) d.add_term({m.e1 - 1, m.e2}, c * m.e1);
        r = d;
    }
    for (int k = 0; k < order2; ++k) {
        BivariatePolynomial d;
        for (const auto& [m, c] : r.terms())
            if (m.e2 > 0) d.add_term({m.e1, m.e2 - 1}, c * m.e2);
        r = d;
    }
    return r;
}

BivariatePolynomial linear_substitute(const BivariatePolynomial& phi,
                                      const Rational& a, const Rational& b,
                                      const Rational& c, const Rational& d) {
    if (a * d - b * c == 0) throw PreconditionError("singular linear substitution");
    int max_e1 = 0, max_e2 = 0;
    for (const auto& [m, cc] : phi.terms()) {
        max_e1 = std::max(max_e1, m.e1);
        max_e2 = std::max(max_e2, m.e2);
    }
    BivariatePolynomial u = BivariatePolynomial::monomial(a, 1, 0) +
                            BivariatePolynomial::monomial(b, 0, 1);
    BivariatePolynomial v = BivariatePolynomial::monomial(c, 1, 0) +
                            BivariatePolynomial::monomial(d, 0, 1);
    std::vector<BivariatePolynomial> pu(static_cast<std::size_t>(max_e1) + 1);
    std::vector<BivariatePolynomial> pv(static_cast<std::size_t>(max_e2) + 1);
    pu[0] = BivariatePolynomial(Rational(1));
    pv[0] = BivariatePolynomial(Rational(1));
    for (int k = 1; k <= max_e1; ++k) pu[static_cast<std::size_t>(k)] =
        pu[static_cast<std::size_t>(k - 1)] * u;
    for (int k = 1; k <= max_e2; ++k) pv[static_cast<std::size_t>(k)] =
        pv[static_cast<std::size_t>(k - 1)] * v;
    BivariatePolynomial r;
    for (const auto& [m, cc] : phi.terms())
        r = r + pu[static_cast<std::size_t>(m.e1)] * pv[static_cast<std::size_t>(m.e2)] * cc;
    return r;
}

double evaluate(const BivariatePolynomial& phi, double x1, double x2) {
    // Horner in x2; the x2-degree coefficient polynomials are Horner in x1.
    if (phi.is_zero()) return 0.0;
    int max_e2 = 0;
    for (const auto& [m, c] : phi.terms()) max_e2 = std::max(max_e2, m.e2);

    double acc = 0.0;
    for (int k = max_e2; k >= 0; --k) {
        // coefficient of x2^k as a polynomial in x1, evaluated by Horner
        int max_e1 = -1;
        for (const auto& [m, c] : phi.terms())
            if (m.e2 == k) max_e1 = std::max(max_e1, m.e1);
        double coeff = 0.0;
        if (max_e1 >= 0) {
            for (int j = max_e1; j >= 0; --j) {
                coeff *= x1;
                auto it = phi.terms().find({j, k});
                if (it != phi.terms().end()) coeff += to_double(it->second);
            }
        }
        acc = acc * x2 + coeff;
    }
    return acc;
}

Rational evaluate_exact(const BivariatePolynomial& phi,
                        const Rational& x1, const Rational& x2) {
    Rational acc(0);
    int last_e1 = -1, last_e2 = -1;
    Rational p1(1), p2(1);
    for (const auto& [m, c] : phi.terms()) {
        if (m.e1 != last_e1) {
            p1 = rational_pow(x1, static_cast<unsigned long>(m.e1));
            last_e1 = m.e1;
            last_e2 = -1;
        }
        if (m.e2 != last_e2) {
            p2 = rational_pow(x2, static_cast<unsigned long>(m.e2));
            last_e2 = m.e2;
        }
        acc += c * p1 * p2;
    }
    return acc;
}

bool is_finite_type_at_origin(const BivariatePolynomial& phi) {
    if (phi.is_zero()) return false;
    for (const auto& [m, c] : phi.terms())
        if (m.total_degree() < 2) return false;
    return true;
}

} // namespace npinv
