#pragma once

#include "tracforge/polynomial.hpp"

#include <memory>

namespace tracforge {

class QuotientRing;
using QRingPtr = std::shared_ptr<const QuotientRing>;

/// Quotient of a polynomial ring by an ideal; all module arithmetic happens
/// modulo the defining ideal's reduced Groebner basis, which is computed once
/// at construction. A polynomial ring is the special case of an empty
/// defining ideal.
class QuotientRing {
public:
    static QRingPtr make(PolyRingPtr base, std::vector<Polynomial> defining,
                         bool allow_zero_ring = false);
    static QRingPtr polynomial(PolyRingPtr base) { return make(std::move(base), {}); }

    const PolyRingPtr& base() const { return base_; }
    const std::vector<Polynomial>& defining() const { return defining_; }
    /// Reduced Groebner basis of the defining ideal under the base order.
    const std::vector<Polynomial>& defining_gb() const { return gb_; }
    bool is_polynomial_ring() const { return gb_.empty(); }
    bool is_zero_ring() const { return zero_ring_; }

    /// Canonical representative modulo the defining ideal.
    Polynomial reduce(const Polynomial& p) const;
    bool is_zero_in_ring(const Polynomial& p) const { return reduce(p).is_zero(); }

    /// e.g. "GF(32003)[x,y,z]/(x^2*y + z^2) weights (1,2,2) order grevlex"
    std::string header() const;

private:
    QuotientRing(PolyRingPtr base, std::vector<Polynomial> defining, std::vector<Polynomial> gb,
                 bool zero_ring);

    PolyRingPtr base_;
    std::vector<Polynomial> defining_;
    std::vector<Polynomial> gb_;
    bool zero_ring_;
};

} // namespace tracforge
