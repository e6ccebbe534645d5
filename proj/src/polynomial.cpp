#include "tracforge/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace tracforge {

namespace {

void require_same_ring(const Polynomial& p, const Polynomial& q) {
    if (p.ring() != q.ring())
        throw std::invalid_argument("polynomial ring mismatch");
}

} // namespace

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    const Field& F = ring_->field();
    const MonomialOrder& ord = ring_->order();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.exp, b.exp) > 0; });
    terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (static_cast<int>(t.exp.size()) != ring_->nvars())
            throw std::invalid_argument("exponent vector length mismatch");
        if (!terms_.empty() && terms_.back().exp == t.exp) {
            terms_.back().coef = F.add(terms_.back().coef, t.coef);
            if (F.is_zero(terms_.back().coef)) terms_.pop_back();
        } else if (!F.is_zero(t.coef)) {
            terms_.push_back(std::move(t));
        }
    }
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_[0].exp) == 0;
}

bool Polynomial::is_unit_constant() const {
    return terms_.size() == 1 && total_degree(terms_[0].exp) == 0;
}

Polynomial Polynomial::operator-() const {
    if (!ring_) return {};
    Polynomial r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = ring_->field().neg(t.coef);
    return r;
}

bool Polynomial::equals(const Polynomial& other) const {
    require_same_ring(*this, other);
    if (terms_.size() != other.terms_.size()) return false;
    const Field& F = ring_->field();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exp != other.terms_[i].exp) return false;
        if (!F.eq(terms_[i].coef, other.terms_[i].coef)) return false;
    }
    return true;
}

Polynomial poly_zero(const PolyRingPtr& ring) { return Polynomial(ring); }

Polynomial poly_constant(const PolyRingPtr& ring, const Scalar& c) {
    if (ring->field().is_zero(c)) return Polynomial(ring);
    return Polynomial(ring, {Term{Exponents(ring->nvars(), 0), c}});
}

Polynomial poly_from_int(const PolyRingPtr& ring, std::int64_t n) {
    return poly_constant(ring, ring->field().from_int(n));
}

Polynomial poly_var(const PolyRingPtr& ring, int index, int power) {
    Exponents e(ring->nvars(), 0);
    e.at(index) = power;
    return Polynomial(ring, {Term{std::move(e), ring->field().one()}});
}

Polynomial poly_monomial(const PolyRingPtr& ring, Exponents e, const Scalar& c) {
    if (ring->field().is_zero(c)) return Polynomial(ring);
    return Polynomial(ring, {Term{std::move(e), c}});
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p, q);
    const Field& F = p.ring()->field();
    const MonomialOrder& ord = p.ring()->order();
    Polynomial r(p.ring());
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() && j < q.terms_.size()) {
        int c = ord.compare(p.terms_[i].exp, q.terms_[j].exp);
        if (c > 0) {
            r.terms_.push_back(p.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            Scalar s = F.add(p.terms_[i].coef, q.terms_[j].coef);
            if (!F.is_zero(s)) r.terms_.push_back(Term{p.terms_[i].exp, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < p.terms_.size(); ++i) r.terms_.push_back(p.terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
    return r;
}

Polynomial poly_sub(const Polynomial& p, const Polynomial& q) { return poly_add(p, -q); }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p, q);
    const Field& F = p.ring()->field();
    std::vector<Term> out;
    out.reserve(p.terms_.size() * q.terms_.size());
    for (const Term& a : p.terms_)
        for (const Term& b : q.terms_)
            out.push_back(Term{exp_add(a.exp, b.exp), F.mul(a.coef, b.coef)});
    return Polynomial(p.ring(), std::move(out));
}

Polynomial poly_scale(const Polynomial& p, const Scalar& c) {
    const Field& F = p.ring()->field();
    if (F.is_zero(c)) return Polynomial(p.ring());
    std::vector<Term> out = p.terms();
    for (auto& t : out) t.coef = F.mul(t.coef, c);
    return Polynomial(p.ring(), std::move(out));
}

Polynomial poly_pow(const Polynomial& p, int n) {
    if (n < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial r = poly_from_int(p.ring(), 1);
    for (int i = 0; i < n; ++i) r = poly_mul(r, p);
    return r;
}

Polynomial poly_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return poly_scale(p, p.ring()->field().inv(p.leading().coef));
}

Polynomial partial_derivative(const Polynomial& p, int var) {
    const Field& F = p.ring()->field();
    std::vector<Term> out;
    for (const Term& t : p.terms()) {
        if (t.exp[var] == 0) continue;
        Term d{t.exp, F.mul(t.coef, F.from_int(t.exp[var]))};
        d.exp[var] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial(p.ring(), std::move(out));
}

Term leading_term(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw std::domain_error("leading term of the zero polynomial");
    const Term* best = &p.terms()[0];
    for (const Term& t : p.terms())
        if (ord.compare(t.exp, best->exp) > 0) best = &t;
    return *best;
}

bool is_homogeneous(const Polynomial& p, const std::vector<std::int64_t>& weights) {
    for (auto w : weights)
        if (w <= 0) throw std::invalid_argument("homogeneity weights must be positive");
    if (p.is_zero()) return true;
    std::int64_t d = weighted_degree(p.terms()[0].exp, weights);
    for (const Term& t : p.terms())
        if (weighted_degree(t.exp, weights) != d) return false;
    return true;
}

// --- parsing ------------------------------------------------------------

namespace {

struct Parser {
    const PolyRingPtr& ring;
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at column " + std::to_string(i + 1) + ": " + msg);
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    Polynomial parse_expr() {
        Polynomial r = eat('-') ? -parse_term() : parse_term();
        for (;;) {
            if (eat('+')) {
                r = poly_add(r, parse_term());
            } else if (eat('-')) {
                r = poly_sub(r, parse_term());
            } else {
                return r;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial r = parse_power();
        while (eat('*')) r = poly_mul(r, parse_power());
        return r;
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) fail("expected integer exponent after '^'");
            int e = std::stoi(s.substr(start, i - start));
            return poly_pow(base, e);
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            ++i;
            Polynomial r = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++i;
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            Rational value(BigInt(s.substr(start, i - start)));
            return poly_constant(ring, ring->field().from_rational(value));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            int v = ring->var_index(name);
            if (v < 0) fail("unknown variable '" + name + "'");
            return poly_var(ring, v);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Polynomial parse_polynomial(const PolyRingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    Polynomial r = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const PolyRing& R = *p.ring();
    const Field& F = R.field();
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        std::string c = F.to_string(t.coef);
        bool neg = !c.empty() && c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        bool constant_term = total_degree(t.exp) == 0;
        if (constant_term) {
            out += mag;
        } else if (mag == "1") {
            out += R.monomial_string(t.exp);
        } else {
            out += mag + "*" + R.monomial_string(t.exp);
        }
    }
    return out;
}

} // namespace tracforge
