#pragma once

#include "tracforge/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tracforge {

struct Term {
    Exponents exp;
    Scalar coef;
};

/// Exact multivariate polynomial. Terms are kept strictly descending in the
/// ring's default order with no zero coefficients; the zero polynomial is the
/// empty term list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(PolyRingPtr ring, std::vector<Term> terms);

    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Leading term under the ring's default order; throws on zero.
    const Term& leading() const;

    bool is_constant() const;
    /// True for a nonzero constant (a unit of the ring and of any quotient).
    bool is_unit_constant() const;

    Polynomial operator-() const;
    bool equals(const Polynomial& other) const;

private:
    friend Polynomial poly_add(const Polynomial&, const Polynomial&);
    friend Polynomial poly_sub(const Polynomial&, const Polynomial&);
    friend Polynomial poly_mul(const Polynomial&, const Polynomial&);

    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial poly_zero(const PolyRingPtr& ring);
Polynomial poly_constant(const PolyRingPtr& ring, const Scalar& c);
Polynomial poly_from_int(const PolyRingPtr& ring, std::int64_t n);
Polynomial poly_var(const PolyRingPtr& ring, int index, int power = 1);
Polynomial poly_monomial(const PolyRingPtr& ring, Exponents e, const Scalar& c);

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, const Scalar& c);
Polynomial poly_pow(const Polynomial& p, int n);
Polynomial poly_monic(const Polynomial& p);
Polynomial partial_derivative(const Polynomial& p, int var);

/// Maximal term under an arbitrary order (no re-sort; the term list itself
/// stays in the ring's default order). Throws on the zero polynomial.
Term leading_term(const Polynomial& p, const MonomialOrder& ord);

bool is_homogeneous(const Polynomial& p, const std::vector<std::int64_t>& weights);

/// Parses the textual syntax: identifiers, integer literals, + - * ^ and
/// parentheses, whitespace-insensitive. Throws std::invalid_argument with a
/// column-tagged message on bad input.
Polynomial parse_polynomial(const PolyRingPtr& ring, const std::string& text);

/// Terms descending in the active order, leading coefficient as-is.
std::string to_string(const Polynomial& p);

} // namespace tracforge
