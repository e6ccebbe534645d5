#include "tracforge/ring.hpp"

#include <set>

namespace tracforge {

PolyRing::PolyRing(Field f, std::vector<std::string> v, MonomialOrder o,
                   std::vector<std::int64_t> w)
    : vars_(std::move(v)), field_(f), order_(std::move(o)), weights_(std::move(w)) {}

PolyRingPtr PolyRing::make(Field field, std::vector<std::string> vars, MonomialOrder order,
                           std::vector<std::int64_t> weights) {
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw std::invalid_argument("ring variable names must be distinct");
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size())
        throw std::invalid_argument("grading weights length must match variable count");
    for (auto w : weights)
        if (w <= 0) throw std::invalid_argument("grading weights must be strictly positive");
    return PolyRingPtr(new PolyRing(field, std::move(vars), std::move(order), std::move(weights)));
}

bool PolyRing::has_nontrivial_weights() const {
    for (auto w : weights_)
        if (w != 1) return true;
    return false;
}

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

PolyRingPtr PolyRing::extended(const std::string& fresh_var, MonomialOrder order) const {
    std::vector<std::string> vars = vars_;
    vars.push_back(fresh_var);
    return make(field_, std::move(vars), std::move(order));
}

std::string PolyRing::monomial_string(const Exponents& e) const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars_[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace tracforge
