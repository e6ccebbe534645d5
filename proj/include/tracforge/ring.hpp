#pragma once

#include "tracforge/field.hpp"
#include "tracforge/monomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tracforge {

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Ambient polynomial ring: variable names, coefficient field, default
/// monomial order, optional grading weights (all ones when unspecified).
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static PolyRingPtr make(Field field, std::vector<std::string> vars,
                            MonomialOrder order = MonomialOrder::grevlex(),
                            std::vector<std::int64_t> weights = {});

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const Field& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    bool has_nontrivial_weights() const;

    /// -1 when the name is not a ring variable.
    int var_index(const std::string& name) const;

    /// Ring with one fresh variable appended (for the radical-membership trick).
    PolyRingPtr extended(const std::string& fresh_var, MonomialOrder order) const;

    std::string monomial_string(const Exponents& e) const;

private:
    PolyRing(Field f, std::vector<std::string> v, MonomialOrder o, std::vector<std::int64_t> w);

    std::vector<std::string> vars_;
    Field field_;
    MonomialOrder order_;
    std::vector<std::int64_t> weights_;
};

} // namespace tracforge
