#include "tracforge/monomial.hpp"

#include <algorithm>

namespace tracforge {

std::int64_t total_degree(const Exponents& e) {
    std::int64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

std::int64_t weighted_degree(const Exponents& e, const std::vector<std::int64_t>& w) {
    if (w.empty()) return total_degree(e);
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
    return d;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exp_disjoint(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<std::int64_t> weights) {
    for (auto w : weights)
        if (w <= 0) throw std::invalid_argument("order weights must be strictly positive");
    MonomialOrder o(Kind::weighted_grevlex);
    o.weights_ = std::move(weights);
    return o;
}

MonomialOrder MonomialOrder::block_elimination(std::vector<int> eliminated) {
    MonomialOrder o(Kind::block_elim);
    o.block_ = std::move(eliminated);
    return o;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::weighted_grevlex: return "weighted-grevlex";
    case Kind::block_elim: return "block-elimination";
    }
    return "?";
}

namespace {

int cmp_grevlex(const Exponents& a, const Exponents& b) {
    std::int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    switch (kind_) {
    case Kind::grevlex:
        return cmp_grevlex(a, b);
    case Kind::lex:
        return cmp_lex(a, b);
    case Kind::weighted_grevlex: {
        std::int64_t da = weighted_degree(a, weights_), db = weighted_degree(b, weights_);
        if (da != db) return da < db ? -1 : 1;
        return cmp_grevlex(a, b);
    }
    case Kind::block_elim: {
        Exponents ba(block_.size()), bb(block_.size());
        for (std::size_t i = 0; i < block_.size(); ++i) {
            ba[i] = a[block_[i]];
            bb[i] = b[block_[i]];
        }
        if (int c = cmp_grevlex(ba, bb)) return c;
        std::vector<bool> in_block(a.size(), false);
        for (int v : block_) in_block[v] = true;
        Exponents ra, rb;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!in_block[i]) {
                ra.push_back(a[i]);
                rb.push_back(b[i]);
            }
        }
        return cmp_grevlex(ra, rb);
    }
    }
    return 0;
}

int ModuleOrder::compare(int pos_a, const Exponents& a, int pos_b, const Exponents& b) const {
    switch (rule) {
    case PositionRule::term_over_position: {
        if (int c = mono.compare(a, b)) return c;
        if (pos_a != pos_b) return pos_a > pos_b ? -1 : 1; // e_0 > e_1 > ...
        return 0;
    }
    case PositionRule::position_over_term: {
        if (pos_a != pos_b) return pos_a > pos_b ? -1 : 1;
        return mono.compare(a, b);
    }
    case PositionRule::schreyer: {
        const SchreyerTwist& ta = twists.at(pos_a);
        const SchreyerTwist& tb = twists.at(pos_b);
        Exponents ea = exp_add(a, ta.exp);
        Exponents eb = exp_add(b, tb.exp);
        if (int c = mono.compare(ea, eb)) return c;
        if (ta.pos != tb.pos) return ta.pos > tb.pos ? -1 : 1;
        if (pos_a != pos_b) return pos_a > pos_b ? -1 : 1;
        return 0;
    }
    }
    return 0;
}

} // namespace tracforge
