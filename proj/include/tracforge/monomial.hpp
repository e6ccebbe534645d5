#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracforge {

/// Exponent vector of a monomial; length always equals the ring's variable count.
using Exponents = std::vector<std::int32_t>;

std::int64_t total_degree(const Exponents& e);
std::int64_t weighted_degree(const Exponents& e, const std::vector<std::int64_t>& w);
bool exp_divides(const Exponents& a, const Exponents& b); // a | b
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b); // requires b | a component-wise
Exponents exp_lcm(const Exponents& a, const Exponents& b);
bool exp_disjoint(const Exponents& a, const Exponents& b); // gcd == 1

/// Total order on ring monomials, compatible with multiplication.
///
/// Tie rules are frozen as follows:
///   grevlex          - higher total degree wins; on equal degree, the
///                      monomial with the *smaller* exponent in the last
///                      differing variable wins.
///   lex              - first differing variable decides, larger exponent wins.
///   weighted_grevlex - higher weighted degree wins; weighted-degree ties are
///                      broken by the full plain grevlex rule above (so for
///                      weights (1,2,2) on x,y,z, x^2*y beats z^2: both have
///                      weighted degree 4 but x^2*y has plain degree 3 > 2).
///   block_elim       - monomials restricted to the eliminated block compare
///                      first (grevlex); ties fall through to the remaining
///                      variables (grevlex).
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, weighted_grevlex, block_elim };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
    static MonomialOrder weighted_grevlex(std::vector<std::int64_t> weights);
    /// `eliminated` lists the variable indices of the leading block.
    static MonomialOrder block_elimination(std::vector<int> eliminated);

    Kind kind() const { return kind_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    const std::vector<int>& eliminated_block() const { return block_; }
    std::string name() const;

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Exponents& a, const Exponents& b) const;

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<std::int64_t> weights_;
    std::vector<int> block_;
};

/// How free-module terms x^a*e_i are ordered relative to each other.
enum class PositionRule {
    term_over_position, // monomial first, lower basis index breaks ties
    position_over_term, // lower basis index first
    schreyer,           // induced order: compare x^a*m_i at the twist positions
};

struct SchreyerTwist {
    Exponents exp; // leading monomial of the inducing basis row
    int pos;       // leading position of the inducing basis row
};

struct ModuleOrder {
    MonomialOrder mono = MonomialOrder::grevlex();
    PositionRule rule = PositionRule::term_over_position;
    std::vector<SchreyerTwist> twists; // used by schreyer only

    static ModuleOrder top(MonomialOrder m) {
        return ModuleOrder{std::move(m), PositionRule::term_over_position, {}};
    }
    static ModuleOrder pot(MonomialOrder m) {
        return ModuleOrder{std::move(m), PositionRule::position_over_term, {}};
    }
    static ModuleOrder schreyer(MonomialOrder base, std::vector<SchreyerTwist> twists) {
        return ModuleOrder{std::move(base), PositionRule::schreyer, std::move(twists)};
    }

    int compare(int pos_a, const Exponents& a, int pos_b, const Exponents& b) const;
};

} // namespace tracforge
